#include "sl3web/tableau.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sl3web {

namespace {

std::string cell_name(int r, int c) {
    return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

// rectangular + weak rows + strict columns; issues appended
void check_semistandard(const tableau& t, std::vector<issue>& out) {
    for (int r = 0; r < t.row_count(); ++r) {
        if (int(t.rows[r].size()) != t.col_count()) {
            out.push_back({errc::wrong_shape, "row " + std::to_string(r + 1) + " has " +
                                                  std::to_string(t.rows[r].size()) + " cells, expected " +
                                                  std::to_string(t.col_count())});
            return;  // ragged: cellwise checks would be ill-defined
        }
    }
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.col_count(); ++c) {
            if (t.at(r, c) < 1)
                out.push_back({errc::wrong_content, "entry < 1 at " + cell_name(r, c)});
            if (c > 0 && t.at(r, c - 1) > t.at(r, c))
                out.push_back({errc::row_not_weakly_increasing, "at " + cell_name(r, c)});
            if (r > 0 && t.at(r - 1, c) >= t.at(r, c))
                out.push_back({errc::column_not_strictly_increasing, "at " + cell_name(r, c)});
        }
}

}  // namespace

std::vector<issue> validate_tableau(const tableau& t, tableau_mode mode) {
    std::vector<issue> out;
    check_semistandard(t, out);
    if (!out.empty()) return out;
    if (mode == tableau_mode::standard) {
        int n = t.cell_count();
        std::vector<int> seen(n + 1, 0);
        for (const auto& row : t.rows)
            for (int v : row)
                if (v >= 1 && v <= n) ++seen[v];
        for (int v = 1; v <= n; ++v)
            if (seen[v] != 1)
                out.push_back({errc::wrong_content, "value " + std::to_string(v) + " appears " +
                                                        std::to_string(seen[v]) + " times"});
    }
    return out;
}

std::vector<issue> validate_tableau(const tableau& t, const sign_string& s) {
    std::vector<issue> out;
    check_semistandard(t, out);
    if (!out.empty()) return out;
    int w = weight(s);
    if (w % 3 != 0) {
        out.push_back({errc::wrong_content, "weight " + std::to_string(w) + " of sign string is not divisible by 3"});
        return out;
    }
    if (t.cell_count() != w || (!t.empty() && t.col_count() != 3)) {
        out.push_back({errc::wrong_shape, "expected shape (3,..,3) with " + std::to_string(w) + " cells, got " +
                                              std::to_string(t.row_count()) + "x" + std::to_string(t.col_count())});
        return out;
    }
    composition want = content_of_sign(s);
    std::vector<int> got(s.size() + 2, 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > int(s.size())) {
                out.push_back({errc::wrong_content, "entry " + std::to_string(v) + " outside 1.." + std::to_string(s.size())});
                return out;
            }
            ++got[v];
        }
    for (int v = 1; v <= int(s.size()); ++v)
        if (got[v] != want[v - 1])
            out.push_back({errc::wrong_content, "value " + std::to_string(v) + " appears " + std::to_string(got[v]) +
                                                    " times, content wants " + std::to_string(want[v - 1])});
    return out;
}

tableau parse_tableau(const std::string& text) {
    tableau t;
    if (text.empty()) return t;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, '/')) {
        std::vector<int> row;
        if (row_text.find(',') != std::string::npos) {
            std::stringstream rs(row_text);
            std::string ent;
            while (std::getline(rs, ent, ',')) {
                try {
                    size_t used = 0;
                    int v = std::stoi(ent, &used);
                    if (used != ent.size() || v < 1) throw std::invalid_argument(ent);
                    row.push_back(v);
                } catch (const std::exception&) {
                    fail(errc::bad_tableau_text, "bad entry '" + ent + "' in row '" + row_text + "'");
                }
            }
        } else {
            for (char c : row_text) {
                if (c < '1' || c > '9')
                    fail(errc::bad_tableau_text, std::string("bad digit '") + c + "' in row '" + row_text + "'");
                row.push_back(c - '0');
            }
        }
        if (row.empty()) fail(errc::bad_tableau_text, "empty row in '" + text + "'");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string format_tableau(const tableau& t) {
    bool shorthand = true;
    for (const auto& row : t.rows)
        for (int v : row)
            if (v > 9) shorthand = false;
    std::string out;
    for (int r = 0; r < t.row_count(); ++r) {
        if (r) out += '/';
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c && !shorthand) out += ',';
            out += std::to_string(t.rows[r][c]);
        }
    }
    return out;
}

tableau conjugate(const tableau& t) {
    for (const auto& row : t.rows)
        if (row.size() != t.rows[0].size()) fail(errc::wrong_shape, "conjugate of a ragged tableau");
    tableau out;
    if (t.empty()) return out;
    out.rows.assign(t.col_count(), std::vector<int>(t.row_count()));
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.col_count(); ++c) out.rows[c][r] = t.at(r, c);
    return out;
}

std::vector<std::pair<int, int>> tau_set(const tableau& t) {
    if (auto bad = validate_tableau(t, tableau_mode::standard); !bad.empty())
        fail(errc::not_standard, "tau_set: " + issues_to_string(bad));
    int n = t.cell_count();
    std::vector<int> row_of(n + 2, 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int v : t.rows[r]) row_of[v] = r;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
        if (row_of[i] < row_of[i + 1]) pairs.emplace_back(i, i + 1);
    return pairs;
}

int pair_map::value_of_label(int label) const {
    for (size_t p = 0; p < spans.size(); ++p)
        if (label >= spans[p].first && label < spans[p].first + spans[p].count) return int(p) + 1;
    fail(errc::index_out_of_range, "label " + std::to_string(label) + " not covered by pair map");
}

std::vector<std::pair<int, std::pair<int, int>>> pair_map::minus_pairs() const {
    std::vector<std::pair<int, std::pair<int, int>>> out;
    for (size_t p = 0; p < spans.size(); ++p)
        if (spans[p].count == 2) out.push_back({int(p), {spans[p].first, spans[p].first + 1}});
    return out;
}

standardized standardize(const tableau& t, const sign_string& s) {
    if (auto bad = validate_tableau(t, s); !bad.empty())
        fail(errc::not_content_of_s, "standardize: " + issues_to_string(bad));
    standardized out;
    out.tab = t;
    out.pm.spans.resize(s.size());
    int next_label = 1;
    for (int v = 1; v <= int(s.size()); ++v) {
        // occurrences of v, ordered by column
        std::vector<std::pair<int, int>> cells;  // (col, row)
        for (int r = 0; r < t.row_count(); ++r)
            for (int c = 0; c < t.col_count(); ++c)
                if (t.at(r, c) == v) cells.emplace_back(c, r);
        std::sort(cells.begin(), cells.end());
        out.pm.spans[v - 1] = {next_label, int(cells.size())};
        for (auto [c, r] : cells) out.tab.rows[r][c] = next_label++;
    }
    return out;
}

tableau destandardize(const tableau& std_tab, const pair_map& pm) {
    tableau out = std_tab;
    for (auto& row : out.rows)
        for (int& v : row) v = pm.value_of_label(v);
    return out;
}

tableau jdt_promote(const tableau& t) {
    if (auto bad = validate_tableau(t); !bad.empty())
        fail(errc::not_semistandard, "jdt_promote: " + issues_to_string(bad));
    if (t.empty()) return t;
    int ell = 0;
    for (const auto& row : t.rows)
        for (int v : row) ell = std::max(ell, v);
    std::vector<int> seen(ell + 1, 0);
    for (const auto& row : t.rows)
        for (int v : row) ++seen[v];
    for (int v = 1; v <= ell; ++v)
        if (!seen[v]) fail(errc::missing_value, "jdt_promote: value " + std::to_string(v) + " absent");

    constexpr int hole = 0;
    std::vector<std::vector<int>> g;
    for (const auto& row : t.rows) g.push_back(row);
    int R = t.row_count(), C = t.col_count();
    int ones = seen[1];
    for (int pass = 0; pass < ones; ++pass) {
        // the current minimum sits at the top-left corner
        if (g[0][0] != 1) fail(errc::internal_invariant, "jdt_promote: corner is not 1");
        int r = 0, c = 0;
        g[0][0] = hole;
        while (true) {
            bool has_below = r + 1 < R && g[r + 1][c] != hole;
            bool has_right = c + 1 < C && g[r][c + 1] != hole;
            if (!has_below && !has_right) break;
            bool slide_up = has_below && (!has_right || g[r + 1][c] <= g[r][c + 1]);
            if (slide_up) {
                g[r][c] = g[r + 1][c];
                g[r + 1][c] = hole;
                ++r;
            } else {
                g[r][c] = g[r][c + 1];
                g[r][c + 1] = hole;
                ++c;
            }
        }
    }
    tableau out;
    out.rows.assign(R, std::vector<int>(C));
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) out.rows[r][c] = g[r][c] == hole ? ell : g[r][c] - 1;
    if (auto bad = validate_tableau(out); !bad.empty())
        fail(errc::internal_invariant, "jdt_promote produced a non-semistandard result: " + issues_to_string(bad));
    return out;
}

namespace {

int max_entry(const tableau& t) {
    int m = 0;
    for (const auto& row : t.rows)
        for (int v : row) m = std::max(m, v);
    return m;
}

// the column-preserving merge on 3-column inputs
tableau shuffle_columns(const tableau& tp, const tableau& t, int i) {
    int l2 = max_entry(tp);
    std::array<std::vector<int>, 3> cols;
    auto place = [&](const tableau& src, auto keep, int shift) {
        for (int r = 0; r < src.row_count(); ++r)
            for (int c = 0; c < src.col_count(); ++c)
                if (keep(src.at(r, c))) cols[c].push_back(src.at(r, c) + shift);
    };
    place(t, [&](int j) { return j <= i; }, 0);
    place(tp, [&](int) { return true; }, i);
    place(t, [&](int j) { return j > i; }, l2);
    size_t rows = cols[0].size();
    if (cols[1].size() != rows || cols[2].size() != rows)
        fail(errc::internal_invariant, "shuffle: uneven columns");
    for (auto& col : cols) std::sort(col.begin(), col.end());
    tableau out;
    out.rows.assign(rows, std::vector<int>(3));
    for (size_t r = 0; r < rows; ++r)
        for (int c = 0; c < 3; ++c) out.rows[r][c] = cols[c][r];
    return out;
}

void require_full_fill(const tableau& t, const char* who) {
    if (auto bad = validate_tableau(t); !bad.empty())
        fail(errc::not_semistandard, std::string(who) + ": " + issues_to_string(bad));
    int ell = max_entry(t);
    std::vector<int> seen(ell + 1, 0);
    for (const auto& row : t.rows)
        for (int v : row) ++seen[v];
    for (int v = 1; v <= ell; ++v)
        if (!seen[v]) fail(errc::missing_value, std::string(who) + ": value " + std::to_string(v) + " absent");
}

}  // namespace

tableau shuffle(const tableau& tp, const tableau& t, int i) {
    if (tp.empty() && t.empty()) return {};
    // Shape dispatch first: 3-row inputs are conjugates, so their semistandard
    // invariants only hold after transposing back to column form.
    bool by_columns = (t.empty() || t.col_count() == 3) && (tp.empty() || tp.col_count() == 3);
    bool by_rows = !by_columns && (t.empty() || t.row_count() == 3) && (tp.empty() || tp.row_count() == 3);
    if (!by_columns && !by_rows)
        fail(errc::wrong_shape, "shuffle wants both tableaux 3-column or both 3-row, got " +
                                    std::to_string(t.row_count()) + "x" + std::to_string(t.col_count()) + " and " +
                                    std::to_string(tp.row_count()) + "x" + std::to_string(tp.col_count()));
    tableau tpc = by_rows ? conjugate(tp) : tp;
    tableau tc = by_rows ? conjugate(t) : t;
    if (!tpc.empty()) require_full_fill(tpc, "shuffle (inserted tableau)");
    if (!tc.empty()) require_full_fill(tc, "shuffle (host tableau)");
    int l1 = max_entry(tc);
    if (i < 0 || i > l1)
        fail(errc::index_out_of_range,
             "shuffle index " + std::to_string(i) + " outside 0.." + std::to_string(l1));

    tableau out;
    if (tpc.empty()) out = tc;
    else if (tc.empty()) out = tpc;  // only reachable with i == 0
    else out = shuffle_columns(tpc, tc, i);
    if (auto bad = validate_tableau(out); !bad.empty())
        fail(errc::result_not_semistandard, "shuffle at " + std::to_string(i) + ": " + issues_to_string(bad));
    return by_rows ? conjugate(out) : out;
}

filling_stream::filling_stream(sign_string s) : signs_(std::move(s)) {
    content_ = content_of_sign(signs_);
    nvals_ = int(signs_.size());
    int w = weight(signs_);
    if (w % 3 != 0) {
        done_ = true;  // no fillings at all
        return;
    }
    rows_ = w / 3;
    cells_ = w;
    remaining_.assign(nvals_ + 1, 0);
    for (int v = 1; v <= nvals_; ++v) remaining_[v] = content_[v - 1];
}

bool filling_stream::ok(int cell, int v) const {
    if (remaining_[v] == 0) return false;
    int r = cell / 3, c = cell % 3;
    if (c > 0 && v < vals_[cell - 1]) return false;       // row weakly increases
    if (r > 0 && v <= vals_[cell - 3]) return false;      // column strictly increases
    return true;
}

tableau filling_stream::materialize() const {
    tableau t;
    t.rows.assign(rows_, std::vector<int>(3));
    for (int cell = 0; cell < cells_; ++cell) t.rows[cell / 3][cell % 3] = vals_[cell];
    return t;
}

std::optional<tableau> filling_stream::next() {
    if (done_) return std::nullopt;
    if (cells_ == 0) {  // the empty filling, exactly once
        done_ = true;
        return tableau{};
    }
    int cell;
    int start;
    if (!emitted_any_) {
        vals_.assign(cells_, 0);
        cell = 0;
        start = 1;
    } else {  // resume: advance past the previous solution
        cell = cells_ - 1;
        start = vals_[cell] + 1;
        ++remaining_[vals_[cell]];
    }
    while (true) {
        if (cell == cells_) {
            emitted_any_ = true;
            return materialize();
        }
        int v = start;
        for (; v <= nvals_; ++v)
            if (ok(cell, v)) break;
        if (v <= nvals_) {
            vals_[cell] = v;
            --remaining_[v];
            ++cell;
            start = 1;
        } else {
            if (cell == 0) {
                done_ = true;
                return std::nullopt;
            }
            --cell;
            start = vals_[cell] + 1;
            ++remaining_[vals_[cell]];
        }
    }
}

std::vector<tableau> enumerate_fillings(const sign_string& s) {
    std::vector<tableau> out;
    filling_stream stream(s);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace sl3web
