#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sl3web {

// Every rejection the library can produce, by name. Validators return lists of
// issues; operations with hard preconditions throw op_error with one of these.
enum class errc {
    // text / json input
    bad_sign_text,
    bad_tableau_text,
    bad_web_json,
    // tableau shape & fill
    wrong_shape,
    row_not_weakly_increasing,
    column_not_strictly_increasing,
    wrong_content,
    not_standard,
    not_content_of_s,
    not_semistandard,
    missing_value,
    index_out_of_range,
    result_not_semistandard,
    not_a_filling,
    // web structure
    broken_involution,
    broken_rotation,
    wall_path_broken,
    boundary_vertex_malformed,
    internal_vertex_malformed,
    mixed_orientation,
    edge_orientation_conflict,
    boundary_sign_mismatch,
    not_connected,
    euler_formula_violated,
    // web operations
    pair_not_coincident,
    pair_not_adjacent,
    missing_geometry,
    // non-ellipticity findings
    circle_component,
    small_face,
    // catch-all for internal invariant breaks
    internal_invariant,
};

const char* errc_name(errc c);

struct issue {
    errc code;
    std::string detail;  // human-readable, includes offending cell/vertex/face
};

class op_error : public std::runtime_error {
  public:
    op_error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw op_error(c, what); }

inline std::string issues_to_string(const std::vector<issue>& v) {
    std::string out;
    for (const auto& i : v) {
        if (!out.empty()) out += "; ";
        out += errc_name(i.code);
        if (!i.detail.empty()) { out += ": "; out += i.detail; }
    }
    return out;
}

}  // namespace sl3web
