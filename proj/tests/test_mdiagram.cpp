#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "sl3web/mdiagram.hpp"
#include "sl3web/tableau.hpp"

using namespace sl3web;

namespace {

using matching = std::vector<std::pair<int, int>>;  // (smaller, larger) per arc

bool noncrossing(const matching& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) {
            auto [a, b] = m[i];
            auto [c, d] = m[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
        }
    return true;
}

// All matchings pairing each right point with a distinct smaller left point.
void all_matchings(const std::vector<int>& lefts, const std::vector<int>& rights, size_t k,
                   std::vector<bool>& used, matching& acc, std::vector<matching>& out) {
    if (k == rights.size()) {
        out.push_back(acc);
        return;
    }
    for (size_t i = 0; i < lefts.size(); ++i) {
        if (used[i] || lefts[i] >= rights[k]) continue;
        used[i] = true;
        acc.emplace_back(lefts[i], rights[k]);
        all_matchings(lefts, rights, k + 1, used, acc, out);
        acc.pop_back();
        used[i] = false;
    }
}

// The unique noncrossing matching of rights to smaller lefts, found by brute
// force; fails the test if existence or uniqueness breaks.
matching unique_noncrossing(const std::vector<int>& lefts, const std::vector<int>& rights) {
    std::vector<matching> all;
    std::vector<bool> used(lefts.size(), false);
    matching acc;
    all_matchings(lefts, rights, 0, used, acc, all);
    std::vector<matching> good;
    for (auto& m : all)
        if (noncrossing(m)) good.push_back(m);
    REQUIRE(good.size() == 1);
    matching m = good[0];
    std::sort(m.begin(), m.end(), [](auto& x, auto& y) { return x.second < y.second; });
    return m;
}

matching arcs_to_pairs(const std::vector<arc>& arcs) {
    matching m;
    for (const arc& a : arcs) m.emplace_back(a.a, a.b);
    std::sort(m.begin(), m.end(), [](auto& x, auto& y) { return x.second < y.second; });
    return m;
}

std::vector<int> row_of(const tableau& t, int r) { return t.rows[size_t(r)]; }

}  // namespace

TEST_CASE("arc geometry: center, radius, covering") {
    arc a{3, 5};
    CHECK(a.center() == rat64(4));
    CHECK(a.radius() == rat64(1));
    CHECK(a.covers(rat64(7, 2)));
    CHECK(!a.covers(rat64(3)));   // endpoints are not covered
    CHECK(!a.covers(rat64(5)));
    CHECK(!a.covers(rat64(11, 2)));
    CHECK(arc{2, 6}.covers(rat64(47, 7)) == false);
    CHECK(arc{1, 7}.covers(rat64(47, 7)));
}

TEST_CASE("m-diagram golden for the crossing example") {
    m_diagram md = build_m_diagram(parse_tableau("13/25/46"));
    CHECK(md.points == 6);
    CHECK(md.left == std::vector<arc>{{1, 2}, {3, 5}});
    CHECK(md.right == std::vector<arc>{{2, 4}, {5, 6}});
    CHECK(format_m_diagram(md) == "L:(1,2)(3,5);R:(2,4)(5,6)");
    for (size_t i = 0; i < md.left.size(); ++i) CHECK(md.left[i].b == md.right[i].a);
}

TEST_CASE("m-diagram golden for the seven-sign worked example") {
    m_diagram md = build_m_diagram(parse_tableau("123/467/589"));
    CHECK(md.points == 9);
    std::set<std::pair<int, int>> left, right;
    for (const arc& a : md.left) left.insert({a.a, a.b});
    for (const arc& a : md.right) right.insert({a.a, a.b});
    CHECK(left == std::set<std::pair<int, int>>{{3, 4}, {2, 6}, {1, 7}});
    CHECK(right == std::set<std::pair<int, int>>{{4, 5}, {7, 8}, {6, 9}});
    for (size_t i = 0; i < md.left.size(); ++i) CHECK(md.left[i].b == md.right[i].a);
    // middles ascend left to right in the arc tables
    for (size_t i = 1; i < md.left.size(); ++i) CHECK(md.left[i - 1].b < md.left[i].b);
}

TEST_CASE("nested-arc golden") {
    m_diagram md = build_m_diagram(parse_tableau("13/24/56"));
    CHECK(md.left == std::vector<arc>{{1, 2}, {3, 4}});
    CHECK(md.right == std::vector<arc>{{2, 6}, {4, 5}});
    CHECK(crossings(md).empty());
}

TEST_CASE("m-diagram arcs are the unique noncrossing matchings") {
    for (int n = 1; n <= 3; ++n) {
        for (const tableau& cols : enumerate_fillings(all_plus(3 * n))) {
            tableau t = conjugate(cols);  // 3 rows of n
            m_diagram md = build_m_diagram(t);
            CHECK(arcs_to_pairs(md.left) == unique_noncrossing(row_of(t, 0), row_of(t, 1)));
            CHECK(arcs_to_pairs(md.right) == unique_noncrossing(row_of(t, 1), row_of(t, 2)));
            // arcs within one family never cross each other
            CHECK(noncrossing(arcs_to_pairs(md.left)));
            CHECK(noncrossing(arcs_to_pairs(md.right)));
        }
    }
}

TEST_CASE("interleaving test distinguishes nesting from crossing") {
    CHECK(arcs_interleave(arc{3, 5}, arc{2, 4}));
    CHECK(arcs_interleave(arc{1, 7}, arc{6, 9}));
    CHECK(!arcs_interleave(arc{3, 4}, arc{2, 6}));  // nested
    CHECK(!arcs_interleave(arc{1, 2}, arc{4, 5}));  // disjoint
    CHECK(!arcs_interleave(arc{1, 2}, arc{2, 6}));  // shared endpoint
}

TEST_CASE("crossing abscissas are exact rationals") {
    CHECK(crossing_abscissa(arc{3, 5}, arc{2, 4}) == rat64(7, 2));
    CHECK(crossing_abscissa(arc{1, 7}, arc{6, 9}) == rat64(47, 7));

    m_diagram md = build_m_diagram(parse_tableau("13/25/46"));
    auto cs = crossings(md);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].left_index == 1);   // arc (3,5)
    CHECK(cs[0].right_index == 0);  // arc (2,4)
    CHECK(cs[0].x == rat64(7, 2));

    m_diagram md9 = build_m_diagram(parse_tableau("123/467/589"));
    auto cs9 = crossings(md9);
    REQUIRE(cs9.size() == 1);
    CHECK(md9.left[size_t(cs9[0].left_index)] == arc{1, 7});
    CHECK(md9.right[size_t(cs9[0].right_index)] == arc{6, 9});
    CHECK(cs9[0].x == rat64(47, 7));
}

TEST_CASE("crossings are sorted by left arc then abscissa") {
    for (int n = 2; n <= 4; ++n)
        for (const tableau& cols : enumerate_fillings(all_plus(3 * n))) {
            m_diagram md = build_m_diagram(conjugate(cols));
            auto cs = crossings(md);
            for (size_t k = 1; k < cs.size(); ++k) {
                bool ordered = cs[k - 1].left_index < cs[k].left_index ||
                               (cs[k - 1].left_index == cs[k].left_index && cs[k - 1].x < cs[k].x);
                CHECK(ordered);
            }
            for (const crossing& c : cs) {
                CHECK(arcs_interleave(md.left[size_t(c.left_index)], md.right[size_t(c.right_index)]));
                CHECK(crossing_abscissa(md.left[size_t(c.left_index)], md.right[size_t(c.right_index)]) == c.x);
            }
        }
}

TEST_CASE("m-diagram construction rejects bad input by name") {
    try {
        build_m_diagram(parse_tableau("112/233"));  // semistandard, not standard
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::not_standard);
    }
    try {
        build_m_diagram(parse_tableau("124/356"));  // standard but 2 rows, wants 3
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::wrong_shape);
    }
}
