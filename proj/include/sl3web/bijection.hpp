#pragma once

#include <string>
#include <vector>

#include "sl3web/tableau.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// Full forward map: semistandard filling of s -> non-elliptic web with boundary s.
// standardize -> conjugate -> chord diagram -> raw all-plus web -> contract minus pairs.
// Throws op_error if t is not a content filling of s.
web tableau_to_web(const tableau& t, const sign_string& s);

// Outcome of one exhaustive run over all fillings of a sign string (or all pairs
// for the join check). Mathematical failures are recorded, never thrown.
struct verification_report {
    std::string check;        // "bijection" | "rotation" | "join"
    std::string subject;      // the sign string(s) and parameters, human formatted
    long long filling_count = 0;  // instances examined (pairs for join)
    long long web_count = 0;      // distinct canonical codes among the webs built
    std::vector<std::string> round_trip_failures;
    std::vector<std::string> distinctness_collisions;
    std::vector<std::string> ellipticity_violations;
    std::vector<std::string> tau_failures;
    std::vector<std::string> rotation_mismatches;
    std::vector<std::string> join_mismatches;
    double elapsed_seconds = 0.0;

    bool success() const {
        return round_trip_failures.empty() && distinctness_collisions.empty() && ellipticity_violations.empty() &&
               tau_failures.empty() && rotation_mismatches.empty() && join_mismatches.empty() &&
               filling_count == web_count;
    }
};

// For every filling of s: build the web, demand validity and non-ellipticity, read
// it back (round trip), check the shared-neighbor property for every tau pair of
// the standardization, and collect canonical codes for pairwise distinctness.
verification_report verify_sign(const sign_string& s, int threads = 0);

// For every filling T of s: rotate(web(T)) must equal web(jdt_promote(T)) over the
// rotated sign string (by canonical code), the rotated web must read back as the
// promoted filling, and the standardization of the promotion must equal promotion
// (applied once for a leading plus, twice for a leading minus) of the standardization.
verification_report verify_rotation(const sign_string& s, int threads = 0);

// For every filling pair (T1 of s1, T2 of s2): join(web(T1), web(T2), i) must equal
// web(shuffle(T2 into T1 after value i)) over the spliced sign string.
verification_report verify_join(const sign_string& s1, const sign_string& s2, int i, int threads = 0);

// One PASS/FAIL line plus any recorded failure details.
std::string report_table(const verification_report& r);

}  // namespace sl3web
