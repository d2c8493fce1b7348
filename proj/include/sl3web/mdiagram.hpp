#pragma once

#include <vector>

#include "sl3web/errors.hpp"
#include "sl3web/rational.hpp"
#include "sl3web/tableau.hpp"

namespace sl3web {

// An arc of an m-diagram: a semicircle over boundary points a < b, drawn with
// center (a+b)/2 and radius (b-a)/2.
struct arc {
    int a = 0, b = 0;  // 1-based boundary points, a < b

    rat64 center() const { return rat64(a + b, 2); }
    rat64 radius() const { return rat64(b - a, 2); }
    bool covers(rat64 x) const { return rat64(a) < x && x < rat64(b); }

    friend bool operator==(const arc&, const arc&) = default;
};

// A transversal crossing between a left arc and a right arc, with its exact
// abscissa. Upper semicircles meet in at most one point.
struct crossing {
    int left_index = 0;   // index into m_diagram::left
    int right_index = 0;  // index into m_diagram::right
    rat64 x;              // crossing abscissa

    friend bool operator==(const crossing&, const crossing&) = default;
};

// Arcs of the m over each middle-row entry: the left arc joins a top-row entry
// to it, the right arc joins it to a bottom-row entry. Indexed so that
// left[i] and right[i] belong to the same m (share its middle point).
struct m_diagram {
    int points = 0;          // number of boundary points (3n)
    std::vector<arc> left;   // left[i].b == right[i].a == middle-row entry, increasing
    std::vector<arc> right;
};

// Greedy nearest-unpaired matchings: each middle-row entry (ascending) takes
// the largest unpaired top-row entry below it; each bottom-row entry takes the
// largest unpaired middle-row entry below it. Input: standard, shape (n,n,n).
m_diagram build_m_diagram(const tableau& t);  // throws not_standard, wrong_shape

// All transversal crossings (strictly interleaved endpoint pairs), sorted by
// (left_index, abscissa). Arcs of the same m share an endpoint: never a crossing.
std::vector<crossing> crossings(const m_diagram& m);

// Crossing abscissa of two generic semicircles (must actually interleave).
rat64 crossing_abscissa(const arc& l, const arc& r);

bool arcs_interleave(const arc& l, const arc& r);

// Text form "L:(1,2)(3,5);R:(2,4)(5,6)"
std::string format_m_diagram(const m_diagram& m);

}  // namespace sl3web
