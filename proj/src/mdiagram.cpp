#include "sl3web/mdiagram.hpp"

#include <algorithm>

namespace sl3web {

m_diagram build_m_diagram(const tableau& t) {
    if (auto bad = validate_tableau(t, tableau_mode::standard); !bad.empty())
        fail(errc::not_standard, "build_m_diagram: " + issues_to_string(bad));
    if (t.row_count() != 3 && !t.empty())
        fail(errc::wrong_shape, "build_m_diagram wants shape (n,n,n), got " + std::to_string(t.row_count()) + " rows");

    m_diagram m;
    m.points = t.cell_count();
    if (t.empty()) return m;

    std::vector<int> row_of(m.points + 1, 0);
    for (int r = 0; r < 3; ++r)
        for (int v : t.rows[r]) row_of[v] = r;

    // middle entries (ascending) each grab the nearest unpaired top entry to
    // their left: a stack matching, like closing parentheses
    std::vector<arc> left_of_middle(m.points + 1);
    std::vector<int> stack;
    for (int v = 1; v <= m.points; ++v) {
        if (row_of[v] == 0) stack.push_back(v);
        if (row_of[v] == 1) {
            if (stack.empty()) fail(errc::internal_invariant, "standard tableau with unmatched middle entry");
            left_of_middle[v] = {stack.back(), v};
            stack.pop_back();
        }
    }
    stack.clear();
    std::vector<arc> right_of_middle(m.points + 1);
    for (int v = 1; v <= m.points; ++v) {
        if (row_of[v] == 1) stack.push_back(v);
        if (row_of[v] == 2) {
            if (stack.empty()) fail(errc::internal_invariant, "standard tableau with unmatched bottom entry");
            right_of_middle[stack.back()] = {stack.back(), v};
            stack.pop_back();
        }
    }
    for (int v = 1; v <= m.points; ++v)
        if (row_of[v] == 1) {
            m.left.push_back(left_of_middle[v]);
            m.right.push_back(right_of_middle[v]);
        }
    return m;
}

bool arcs_interleave(const arc& l, const arc& r) {
    return (l.a < r.a && r.a < l.b && l.b < r.b) || (r.a < l.a && l.a < r.b && r.b < l.b);
}

rat64 crossing_abscissa(const arc& l, const arc& r) {
    rat64 m1 = l.center(), r1 = l.radius();
    rat64 m2 = r.center(), r2 = r.radius();
    return (r1 * r1 - r2 * r2 - m1 * m1 + m2 * m2) / (rat64(2) * (m2 - m1));
}

std::vector<crossing> crossings(const m_diagram& m) {
    std::vector<crossing> out;
    for (size_t li = 0; li < m.left.size(); ++li)
        for (size_t ri = 0; ri < m.right.size(); ++ri)
            if (arcs_interleave(m.left[li], m.right[ri]))
                out.push_back({int(li), int(ri), crossing_abscissa(m.left[li], m.right[ri])});
    std::sort(out.begin(), out.end(), [](const crossing& a, const crossing& b) {
        if (a.left_index != b.left_index) return a.left_index < b.left_index;
        return a.x < b.x;
    });
    return out;
}

std::string format_m_diagram(const m_diagram& m) {
    std::string out = "L:";
    for (const arc& a : m.left) out += "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
    out += ";R:";
    for (const arc& a : m.right) out += "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
    return out;
}

}  // namespace sl3web
