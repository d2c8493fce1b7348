#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl3web/errors.hpp"
#include "sl3web/sign_string.hpp"

namespace sl3web {

// Rectangular Young tableau. Content-form fillings have 3 columns; the
// conjugated standard form has 3 rows. The empty tableau has no rows.
struct tableau {
    std::vector<std::vector<int>> rows;

    int row_count() const { return int(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : int(rows[0].size()); }
    int cell_count() const { return row_count() * col_count(); }
    int at(int r, int c) const { return rows[r][c]; }
    bool empty() const { return rows.empty(); }

    friend bool operator==(const tableau&, const tableau&) = default;
};

// --- validation ------------------------------------------------------------

enum class tableau_mode { semistandard, standard };

// Rectangularity, weak rows, strict columns; standard mode additionally wants
// each of 1..(r*c) exactly once. Returns every violation found.
std::vector<issue> validate_tableau(const tableau& t, tableau_mode mode = tableau_mode::semistandard);

// Content-s mode: semistandard + shape (3,3,...,3) of weight(s) cells + entry
// multiset {i^{lambda_i}}.
std::vector<issue> validate_tableau(const tableau& t, const sign_string& s);

inline bool is_valid(const tableau& t, tableau_mode m = tableau_mode::semistandard) {
    return validate_tableau(t, m).empty();
}
inline bool is_valid(const tableau& t, const sign_string& s) { return validate_tableau(t, s).empty(); }

// --- text / parsing ---------------------------------------------------------

// "1,1,2/2,3,5" or single-digit shorthand "112/235". Empty string = empty tableau.
tableau parse_tableau(const std::string& text);  // throws bad_tableau_text
// Shorthand when every entry is a single digit, comma form otherwise.
std::string format_tableau(const tableau& t);

// --- structural operations ---------------------------------------------------

tableau conjugate(const tableau& t);  // transpose; requires rectangular

// Adjacent pairs (i, i+1) with i strictly above i+1. Requires standard mode.
std::vector<std::pair<int, int>> tau_set(const tableau& t);

// Which consecutive standard labels each sign position received.
struct label_span {
    int first = 0;  // first label (1-based)
    int count = 0;  // 1 for plus, 2 for minus
};
struct pair_map {
    std::vector<label_span> spans;  // indexed by sign position

    // 1-based value owning a standard label
    int value_of_label(int label) const;
    // (position, (a, a+1)) for every minus position, in order
    std::vector<std::pair<int, std::pair<int, int>>> minus_pairs() const;
};

struct standardized {
    tableau tab;  // standard, same shape
    pair_map pm;
};

// Relabel a content-s filling with 1..weight(s): values scanned in increasing
// order get consecutive labels; a doubled value's occurrence in the smaller
// column gets the smaller label.
standardized standardize(const tableau& t, const sign_string& s);  // throws not_content_of_s

// Inverse relabeling; exact round trip with the recorded pair_map.
tableau destandardize(const tableau& std_tab, const pair_map& pm);

// --- jeu-de-taquin promotion -------------------------------------------------

// Five-step promotion: remove the 1s one at a time from the top-left corner,
// slide (the entry below wins ties), decrement, refill holes with the old max.
// Result is semistandard with left-rotated content.
tableau jdt_promote(const tableau& t);  // throws not_semistandard, missing_value

// --- shuffle ------------------------------------------------------------------

// Shuffle of tp into t at i: values 1..i of t keep their columns, values j of
// tp land as j+i in tp's columns, values j>i of t land as j+l2 in t's columns.
// Both inputs 3-column: direct column merge. Both 3-row: conjugate, merge,
// conjugate back. i may be 0 (prepend).
tableau shuffle(const tableau& tp, const tableau& t, int i);
// throws index_out_of_range, wrong_shape, result_not_semistandard

// --- enumeration ----------------------------------------------------------------

// Streams every content-s filling once, in row-major lexicographic order.
// Independent streams over the same sign string are restartable and identical.
class filling_stream {
  public:
    explicit filling_stream(sign_string s);
    std::optional<tableau> next();

  private:
    bool ok(int cell, int v) const;
    tableau materialize() const;

    sign_string signs_;
    composition content_;
    int rows_ = 0, cells_ = 0, nvals_ = 0;
    std::vector<int> vals_;       // chosen value per row-major cell
    std::vector<int> remaining_;  // multiplicity left per value (1-based)
    bool done_ = false;
    bool emitted_any_ = false;
};

std::vector<tableau> enumerate_fillings(const sign_string& s);

}  // namespace sl3web
