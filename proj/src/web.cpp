#include "sl3web/web.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace sl3web {

// --- basic accessors ---------------------------------------------------------

std::vector<int> web::darts_of_vertex(int v) const {
    std::vector<int> out;
    if (v < 0 || v >= vertex_count() || vertex_dart[v] < 0) return out;
    int d = vertex_dart[v];
    for (size_t guard = 0; guard <= darts.size(); ++guard) {
        out.push_back(d);
        d = darts[d].next;
        if (d < 0 || d >= int(darts.size()))
            fail(errc::broken_rotation, "next pointer out of range at vertex " + std::to_string(v));
        if (d == vertex_dart[v]) return out;
    }
    fail(errc::broken_rotation, "rotation at vertex " + std::to_string(v) + " does not close");
}

int web::web_dart_of_boundary(int i) const {
    for (int d : darts_of_vertex(i))
        if (!darts[d].wall) return d;
    fail(errc::boundary_vertex_malformed, "boundary vertex " + std::to_string(i + 1) + " has no web dart");
}

// --- builder -------------------------------------------------------------------

int web_builder::add_internal(vertex_kind k) {
    if (is_boundary(k)) fail(errc::internal_invariant, "add_internal given a boundary kind");
    internal_kinds.push_back(k);
    rotations.emplace_back();
    return int(signs.size() + internal_kinds.size()) - 1;
}

int web_builder::add_edge(int from, int to) {
    edges.push_back({from, to});
    return int(edges.size()) - 1;
}

void web_builder::set_rotation(int internal_vertex, std::vector<int> ccw_edges) {
    int idx = internal_vertex - int(signs.size());
    if (idx < 0 || idx >= int(internal_kinds.size()))
        fail(errc::internal_invariant, "set_rotation on non-internal vertex " + std::to_string(internal_vertex));
    rotations[idx] = std::move(ccw_edges);
}

web web_builder::build() const {
    const int m = int(signs.size());
    const int v_count = m + int(internal_kinds.size());
    const int e_count = int(edges.size());

    web w;
    w.signs = signs;
    w.kinds.reserve(v_count);
    for (sign s : signs)
        w.kinds.push_back(s == sign::plus ? vertex_kind::boundary_source : vertex_kind::boundary_sink);
    for (vertex_kind k : internal_kinds) w.kinds.push_back(k);
    w.edges = edges;

    std::vector<std::vector<int>> incident(v_count);  // edge ids per vertex
    for (int e = 0; e < e_count; ++e) {
        const auto& [from, to] = edges[e];
        if (from < 0 || from >= v_count || to < 0 || to >= v_count)
            fail(errc::internal_invariant, "edge " + std::to_string(e) + " endpoint out of range");
        if (from == to) fail(errc::internal_invariant, "edge " + std::to_string(e) + " is a self-loop");
        incident[from].push_back(e);
        incident[to].push_back(e);
    }

    const int wall_edges = m >= 2 ? m - 1 : 0;
    w.darts.assign(2 * e_count + 2 * wall_edges, dart{});
    for (int e = 0; e < e_count; ++e) {
        w.darts[2 * e] = {2 * e + 1, -1, edges[e].from, e, false, true};
        w.darts[2 * e + 1] = {2 * e, -1, edges[e].to, e, false, false};
    }
    for (int j = 0; j < wall_edges; ++j) {
        int east = 2 * e_count + 2 * j, west = east + 1;
        w.darts[east] = {west, -1, j, -1, true, false};
        w.darts[west] = {east, -1, j + 1, -1, true, false};
    }

    auto dart_at = [&](int e, int v) {
        return edges[e].from == v ? 2 * e : 2 * e + 1;
    };

    w.vertex_dart.assign(v_count, -1);
    auto link_cycle = [&](const std::vector<int>& cycle) {
        for (size_t k = 0; k < cycle.size(); ++k) w.darts[cycle[k]].next = cycle[(k + 1) % cycle.size()];
        if (!cycle.empty()) w.vertex_dart[w.darts[cycle[0]].vertex] = cycle[0];
    };

    for (int i = 0; i < m; ++i) {
        if (incident[i].size() != 1)
            fail(errc::boundary_vertex_malformed, "boundary vertex " + std::to_string(i + 1) + " has " +
                                                      std::to_string(incident[i].size()) + " web edges, wants 1");
        std::vector<int> cycle;
        if (i < m - 1) cycle.push_back(2 * e_count + 2 * i);        // wall east
        cycle.push_back(dart_at(incident[i][0], i));                // the web dart
        if (i > 0) cycle.push_back(2 * e_count + 2 * (i - 1) + 1);  // wall west
        link_cycle(cycle);
    }
    for (int v = m; v < v_count; ++v) {
        std::vector<int> order = rotations[v - m];
        if (order.empty()) order = incident[v];  // default: edge insertion order
        std::vector<int> sorted_order = order, sorted_incident = incident[v];
        std::sort(sorted_order.begin(), sorted_order.end());
        std::sort(sorted_incident.begin(), sorted_incident.end());
        if (sorted_order != sorted_incident)
            fail(errc::internal_invariant,
                 "rotation at vertex " + std::to_string(v) + " does not list its incident edges");
        std::vector<int> cycle;
        for (int e : order) cycle.push_back(dart_at(e, v));
        link_cycle(cycle);
    }

    if (geom) {
        if (int(geom->vertex_pos.size()) != v_count || int(geom->edge_points.size()) != e_count)
            fail(errc::internal_invariant, "geometry tables do not match vertex/edge counts");
        w.geom = geom;
    }
    return w;
}

web_builder deconstruct(const web& w) {
    web_builder b;
    b.signs = w.signs;
    const int m = w.boundary_count();
    b.internal_kinds.assign(w.kinds.begin() + m, w.kinds.end());
    b.edges = w.edges;
    b.rotations.resize(b.internal_kinds.size());
    for (int v = m; v < w.vertex_count(); ++v) {
        std::vector<int>& cyc = b.rotations[v - m];
        for (int d : w.darts_of_vertex(v)) {
            if (w.darts[d].wall) fail(errc::internal_invariant, "wall dart at internal vertex");
            cyc.push_back(w.darts[d].edge);
        }
    }
    return b;
}

// --- construction from an m-diagram ---------------------------------------------

namespace {

int cover_count(const m_diagram& md, rat64 x, const arc& skip1, const arc& skip2) {
    int n = 0;
    for (const arc& a : md.left)
        if (!(a == skip1) && !(a == skip2) && a.covers(x)) ++n;
    for (const arc& a : md.right)
        if (!(a == skip1) && !(a == skip2) && a.covers(x)) ++n;
    return n;
}

// bump exactly coinciding internal vertices upward so a drawing never overlaps dots
void nudge_collisions(geometry& g, size_t first_internal) {
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t a = first_internal; a < g.vertex_pos.size(); ++a)
            for (size_t c = a + 1; c < g.vertex_pos.size(); ++c)
                if (g.vertex_pos[a] == g.vertex_pos[c]) {
                    g.vertex_pos[c].second = g.vertex_pos[c].second + rat64(1);
                    moved = true;
                }
    }
}

}  // namespace

web web_from_m_diagram(const m_diagram& md) {
    const int n = int(md.left.size());
    web_builder b;
    b.signs = all_plus(md.points);

    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = b.add_internal(vertex_kind::internal_sink);

    const auto cs = crossings(md);
    const int q_count = int(cs.size());
    std::vector<int> snk(q_count), src(q_count);
    std::vector<bool> case_a(q_count);  // left arc lifts off first => its west side is on top
    for (int q = 0; q < q_count; ++q) {
        snk[q] = b.add_internal(vertex_kind::internal_sink);
        src[q] = b.add_internal(vertex_kind::internal_source);
        case_a[q] = md.left[cs[q].left_index].a < md.right[cs[q].right_index].a;
    }

    std::vector<int> l_b(q_count, -1), l_m(q_count, -1), r_b(q_count, -1), r_m(q_count, -1);
    std::vector<int> d_left(n, -1), d_stem(n, -1), d_right(n, -1);

    // left arcs run boundary-side to middle-side west->east; crossings() is
    // already sorted by (left arc, ascending x)
    std::vector<std::vector<int>> by_left(n), by_right(n);
    for (int q = 0; q < q_count; ++q) {
        by_left[cs[q].left_index].push_back(q);
        by_right[cs[q].right_index].push_back(q);
    }
    for (int i = 0; i < n; ++i) {
        int prev_vertex = md.left[i].a - 1, prev_q = -1;
        for (int q : by_left[i]) {
            int e = b.add_edge(prev_vertex, snk[q]);
            l_b[q] = e;
            if (prev_q >= 0) l_m[prev_q] = e;
            prev_vertex = src[q];
            prev_q = q;
        }
        d_left[i] = b.add_edge(prev_vertex, u[i]);
        if (prev_q >= 0) l_m[prev_q] = d_left[i];
        d_stem[i] = b.add_edge(md.left[i].b - 1, u[i]);
    }
    // right arcs run boundary-side to middle-side east->west: descending x
    for (int i = 0; i < n; ++i) {
        std::sort(by_right[i].begin(), by_right[i].end(),
                  [&](int a, int bq) { return cs[bq].x < cs[a].x; });
        int prev_vertex = md.right[i].b - 1, prev_q = -1;
        for (int q : by_right[i]) {
            int e = b.add_edge(prev_vertex, snk[q]);
            r_b[q] = e;
            if (prev_q >= 0) r_m[prev_q] = e;
            prev_vertex = src[q];
            prev_q = q;
        }
        d_right[i] = b.add_edge(prev_vertex, u[i]);
        if (prev_q >= 0) r_m[prev_q] = d_right[i];
    }
    std::vector<int> trans(q_count);
    for (int q = 0; q < q_count; ++q) trans[q] = b.add_edge(src[q], snk[q]);

    for (int i = 0; i < n; ++i) b.set_rotation(u[i], {d_left[i], d_stem[i], d_right[i]});
    for (int q = 0; q < q_count; ++q) {
        if (case_a[q]) {  // boundary halves arrive from above
            b.set_rotation(snk[q], {trans[q], r_b[q], l_b[q]});
            b.set_rotation(src[q], {trans[q], r_m[q], l_m[q]});
        } else {  // boundary halves arrive from below
            b.set_rotation(snk[q], {trans[q], l_b[q], r_b[q]});
            b.set_rotation(src[q], {trans[q], l_m[q], r_m[q]});
        }
    }

    geometry g;
    g.vertex_pos.resize(md.points + n + 2 * q_count);
    for (int i = 0; i < md.points; ++i) g.vertex_pos[i] = {rat64(i + 1), rat64(0)};
    for (int i = 0; i < n; ++i) {
        rat64 x(md.left[i].b);
        g.vertex_pos[u[i]] = {x, rat64(1 + cover_count(md, x, md.left[i], md.right[i]))};
    }
    for (int q = 0; q < q_count; ++q) {
        rat64 base(1 + cover_count(md, cs[q].x, md.left[cs[q].left_index], md.right[cs[q].right_index]));
        if (case_a[q]) {
            g.vertex_pos[src[q]] = {cs[q].x, base};
            g.vertex_pos[snk[q]] = {cs[q].x, base + rat64(1)};
        } else {
            g.vertex_pos[snk[q]] = {cs[q].x, base};
            g.vertex_pos[src[q]] = {cs[q].x, base + rat64(1)};
        }
    }
    nudge_collisions(g, size_t(md.points));  // distinct crossings can share an abscissa
    g.edge_points.assign(b.edges.size(), {});
    b.geom = std::move(g);
    return b.build();
}

// --- faces -------------------------------------------------------------------------

face_table faces(const web& w) {
    const int d_count = int(w.darts.size());
    for (int d = 0; d < d_count; ++d) {
        const dart& dd = w.darts[d];
        if (dd.twin < 0 || dd.twin >= d_count || w.darts[dd.twin].twin != d || dd.twin == d)
            fail(errc::broken_involution, "twin of dart " + std::to_string(d));
        if (dd.next < 0 || dd.next >= d_count)
            fail(errc::broken_rotation, "next of dart " + std::to_string(d));
    }
    std::vector<int> indeg(d_count, 0);
    for (int d = 0; d < d_count; ++d) ++indeg[w.darts[d].next];
    for (int d = 0; d < d_count; ++d)
        if (indeg[d] != 1) fail(errc::broken_rotation, "next is not a permutation at dart " + std::to_string(d));

    face_table ft;
    ft.face_of.assign(d_count, -1);
    for (int d0 = 0; d0 < d_count; ++d0) {
        if (ft.face_of[d0] != -1) continue;
        int f = ft.count++;
        ft.degree.push_back(0);
        ft.wall_degree.push_back(0);
        ft.sample.push_back(d0);
        int d = d0;
        do {
            ft.face_of[d] = f;
            ++ft.degree[f];
            if (w.darts[d].wall) ++ft.wall_degree[f];
            d = w.darts[w.darts[d].next].twin;
        } while (d != d0);
    }
    if (w.boundary_count() >= 2 && d_count >= 2 * int(w.edges.size()) + 2) {
        int west_of_first_wall_edge = 2 * int(w.edges.size()) + 1;
        ft.outer = ft.face_of[west_of_first_wall_edge];
    }
    return ft;
}

// --- depth -----------------------------------------------------------------------

int depth_map::left_face(const web& w, int i) const { return ft.face_of[w.web_dart_of_boundary(i)]; }
int depth_map::right_face(const web& w, int i) const {
    return ft.face_of[w.darts[w.web_dart_of_boundary(i)].twin];
}

depth_map compute_depths(const web& w) {
    depth_map dm;
    dm.ft = faces(w);
    dm.depth.assign(dm.ft.count, -1);
    if (dm.ft.outer < 0) return dm;  // no wall to anchor the outer face

    std::vector<std::vector<int>> adj(dm.ft.count);
    for (int e = 0; e < w.edge_count(); ++e) {
        int f1 = dm.ft.face_of[2 * e], f2 = dm.ft.face_of[2 * e + 1];
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    std::queue<int> bfs;
    dm.depth[dm.ft.outer] = 0;
    bfs.push(dm.ft.outer);
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        for (int g : adj[f])
            if (dm.depth[g] < 0) {
                dm.depth[g] = dm.depth[f] + 1;
                bfs.push(g);
            }
    }

    const int m = w.boundary_count();
    if (m >= 2) {
        dm.gap_depths.resize(m + 1);
        dm.gap_depths[0] = dm.depth[dm.left_face(w, 0)];
        for (int i = 1; i < m; ++i) {
            int east_dart = 2 * w.edge_count() + 2 * (i - 1);  // wall dart at b_i pointing east
            dm.gap_depths[i] = dm.depth[dm.ft.face_of[east_dart]];
        }
        dm.gap_depths[m] = dm.depth[dm.right_face(w, m - 1)];
    }
    return dm;
}

// --- validation ----------------------------------------------------------------------

std::vector<issue> validate_web(const web& w) {
    std::vector<issue> out;
    const int m = w.boundary_count();
    const int v_count = w.vertex_count();
    const int d_count = int(w.darts.size());

    if (v_count < m) {
        out.push_back({errc::wrong_shape, "fewer vertices than boundary signs"});
        return out;
    }
    for (int i = 0; i < m; ++i) {
        vertex_kind want = w.signs[i] == sign::plus ? vertex_kind::boundary_source : vertex_kind::boundary_sink;
        if (w.kinds[i] != want)
            out.push_back({errc::boundary_sign_mismatch, "vertex " + std::to_string(i + 1)});
    }
    for (int v = m; v < v_count; ++v)
        if (is_boundary(w.kinds[v]))
            out.push_back({errc::internal_vertex_malformed,
                           "vertex " + std::to_string(v) + " beyond the boundary has a boundary kind"});
    if (int(w.vertex_dart.size()) != v_count) {
        out.push_back({errc::broken_rotation, "vertex_dart table size mismatch"});
        return out;
    }

    // dart table integrity
    for (int d = 0; d < d_count; ++d) {
        const dart& dd = w.darts[d];
        if (dd.twin < 0 || dd.twin >= d_count || dd.twin == d || w.darts[dd.twin].twin != d) {
            out.push_back({errc::broken_involution, "dart " + std::to_string(d)});
            return out;
        }
        if (dd.next < 0 || dd.next >= d_count || dd.vertex < 0 || dd.vertex >= v_count) {
            out.push_back({errc::broken_rotation, "dart " + std::to_string(d)});
            return out;
        }
        if (w.darts[dd.next].vertex != dd.vertex) {
            out.push_back({errc::broken_rotation,
                           "next leaves the vertex of dart " + std::to_string(d)});
            return out;
        }
    }
    {
        std::vector<int> indeg(d_count, 0);
        for (int d = 0; d < d_count; ++d) ++indeg[w.darts[d].next];
        for (int d = 0; d < d_count; ++d)
            if (indeg[d] != 1) {
                out.push_back({errc::broken_rotation, "next is not a permutation"});
                return out;
            }
    }

    // edge <-> dart tables agree
    const int e_count = w.edge_count();
    if (d_count < 2 * e_count) {
        out.push_back({errc::broken_involution, "fewer darts than edge table demands"});
        return out;
    }
    for (int e = 0; e < e_count; ++e) {
        const web_edge& ed = w.edges[e];
        const dart& a = w.darts[2 * e];
        const dart& b = w.darts[2 * e + 1];
        bool fine = ed.from >= 0 && ed.to >= 0 && ed.from < v_count && ed.to < v_count && ed.from != ed.to &&
                    a.vertex == ed.from && b.vertex == ed.to && a.edge == e && b.edge == e && !a.wall && !b.wall &&
                    a.outward && !b.outward && a.twin == 2 * e + 1;
        if (!fine) {
            out.push_back({errc::broken_involution, "edge " + std::to_string(e) + " dart pair inconsistent"});
            return out;
        }
        if (!is_source(w.kinds[ed.from]) || is_source(w.kinds[ed.to]))
            out.push_back({errc::edge_orientation_conflict,
                           "edge " + std::to_string(e) + " does not run source -> sink"});
    }

    // the wall: darts 2E.. pair consecutive boundary vertices
    const int wall_edges = m >= 2 ? m - 1 : 0;
    if (d_count != 2 * e_count + 2 * wall_edges) {
        out.push_back({errc::wall_path_broken, "unexpected dart count for the wall"});
        return out;
    }
    for (int j = 0; j < wall_edges; ++j) {
        const dart& east = w.darts[2 * e_count + 2 * j];
        const dart& west = w.darts[2 * e_count + 2 * j + 1];
        if (!east.wall || !west.wall || east.vertex != j || west.vertex != j + 1 ||
            east.twin != 2 * e_count + 2 * j + 1)
            out.push_back({errc::wall_path_broken, "wall edge " + std::to_string(j)});
    }
    if (!out.empty()) return out;

    // per-vertex degrees and orientation uniformity
    for (int v = 0; v < v_count; ++v) {
        std::vector<int> dv;
        try {
            dv = w.darts_of_vertex(v);
        } catch (const op_error& e) {
            out.push_back({e.code(), e.what()});
            return out;
        }
        int expected = 0;
        for (int d = 0; d < d_count; ++d)
            if (w.darts[d].vertex == v) ++expected;
        if (int(dv.size()) != expected) {
            out.push_back({errc::broken_rotation,
                           "rotation at vertex " + std::to_string(v) + " misses darts"});
            return out;
        }
        int web_darts = 0, wall_darts = 0, outward = 0;
        for (int d : dv) {
            if (w.darts[d].wall) ++wall_darts;
            else {
                ++web_darts;
                if (w.darts[d].outward) ++outward;
            }
        }
        if (v < m) {
            if (web_darts != 1)
                out.push_back({errc::boundary_vertex_malformed,
                               "boundary vertex " + std::to_string(v + 1) + " has " + std::to_string(web_darts) +
                                   " web darts"});
            else if ((outward == 1) != (w.kinds[v] == vertex_kind::boundary_source))
                out.push_back({errc::mixed_orientation,
                               "boundary vertex " + std::to_string(v + 1) + " edge direction contradicts its sign"});
        } else {
            if (web_darts != 3 || wall_darts != 0)
                out.push_back({errc::internal_vertex_malformed,
                               "internal vertex " + std::to_string(v) + " has " + std::to_string(web_darts) +
                                   " web darts and " + std::to_string(wall_darts) + " wall darts"});
            else if (outward != 0 && outward != 3)
                out.push_back({errc::mixed_orientation,
                               "internal vertex " + std::to_string(v) + " has both directions"});
            else if ((outward == 3) != (w.kinds[v] == vertex_kind::internal_source))
                out.push_back({errc::mixed_orientation,
                               "internal vertex " + std::to_string(v) + " orientation contradicts its kind"});
        }
    }
    if (!out.empty()) return out;

    // connectivity through wall + web
    if (d_count > 0) {
        int start = m > 0 ? w.web_dart_of_boundary(0) : 0;
        std::vector<char> seen(d_count, 0);
        std::queue<int> bfs;
        seen[start] = 1;
        bfs.push(start);
        int reached = 0;
        while (!bfs.empty()) {
            int d = bfs.front();
            bfs.pop();
            ++reached;
            for (int nb : {w.darts[d].next, w.darts[d].twin})
                if (!seen[nb]) {
                    seen[nb] = 1;
                    bfs.push(nb);
                }
        }
        if (reached != d_count)
            out.push_back({errc::not_connected,
                           std::to_string(d_count - reached) + " darts unreachable from boundary vertex 1"});
    } else if (v_count > 0) {
        out.push_back({errc::not_connected, "vertices without any darts"});
    }
    if (!out.empty()) return out;

    // Euler characteristic of the closed map
    if (v_count > 0) {
        int f = faces(w).count;
        int e_total = d_count / 2;
        if (v_count - e_total + f != 2)
            out.push_back({errc::euler_formula_violated,
                           "V-E+F = " + std::to_string(v_count - e_total + f)});
    }
    return out;
}

std::vector<issue> ellipticity_violations(const web& w) {
    std::vector<issue> out;
    face_table ft;
    try {
        ft = faces(w);
    } catch (const op_error& e) {
        out.push_back({e.code(), std::string("web too broken for face analysis: ") + e.what()});
        return out;
    }

    // components of the web graph alone (wall ignored) must reach the boundary
    const int v_count = w.vertex_count();
    std::vector<int> comp(v_count, -1);
    for (int v0 = 0; v0 < v_count; ++v0) {
        if (comp[v0] != -1) continue;
        std::queue<int> bfs;
        comp[v0] = v0;
        bfs.push(v0);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int d = 0; d < int(w.darts.size()); ++d)
                if (!w.darts[d].wall && w.darts[d].vertex == v) {
                    int other = w.darts[w.darts[d].twin].vertex;
                    if (comp[other] == -1) {
                        comp[other] = v0;
                        bfs.push(other);
                    }
                }
        }
    }
    std::set<int> with_boundary;
    for (int i = 0; i < w.boundary_count(); ++i) with_boundary.insert(comp[i]);
    std::set<int> flagged;
    for (int v = 0; v < v_count; ++v)
        if (!with_boundary.count(comp[v]) && flagged.insert(comp[v]).second)
            out.push_back({errc::circle_component,
                           "component of vertex " + std::to_string(v) + " never meets the boundary"});

    for (int f = 0; f < ft.count; ++f)
        if (ft.wall_degree[f] == 0 && f != ft.outer && ft.degree[f] < 6)
            out.push_back({errc::small_face, "face " + std::to_string(f) + " bounded by " +
                                                 std::to_string(ft.degree[f]) + " web edges"});
    return out;
}

// --- the semistandard inverse ----------------------------------------------------------

tableau web_to_tableau(const web& w) {
    if (auto bad = validate_web(w); !bad.empty())
        fail(errc::not_a_filling, "web_to_tableau on an invalid web: " + issues_to_string(bad));
    const int m = w.boundary_count();
    if (m == 0) return {};

    depth_map dm = compute_depths(w);
    for (int f = 0; f < dm.ft.count; ++f)
        if (dm.depth[f] < 0) fail(errc::not_a_filling, "face " + std::to_string(f) + " unreachable from outer");

    std::array<std::vector<int>, 3> cols;
    for (int i = 0; i < m; ++i) {
        int dl = dm.depth[dm.left_face(w, i)];
        int dr = dm.depth[dm.right_face(w, i)];
        int value = i + 1;
        if (w.signs[i] == sign::minus) {
            if (dl < dr) { cols[0].push_back(value); cols[1].push_back(value); }
            else if (dl == dr) { cols[0].push_back(value); cols[2].push_back(value); }
            else { cols[1].push_back(value); cols[2].push_back(value); }
        } else {
            int c = dl < dr ? 0 : dl == dr ? 1 : 2;
            cols[c].push_back(value);
        }
    }
    size_t rows = cols[0].size();
    if (cols[1].size() != rows || cols[2].size() != rows)
        fail(errc::not_a_filling, "column loads " + std::to_string(cols[0].size()) + "/" +
                                      std::to_string(cols[1].size()) + "/" + std::to_string(cols[2].size()) +
                                      " are uneven");
    tableau t;
    t.rows.assign(rows, std::vector<int>(3));
    for (size_t r = 0; r < rows; ++r)
        for (int c = 0; c < 3; ++c) t.rows[r][c] = cols[c][r];
    if (auto bad = validate_tableau(t, w.signs); !bad.empty())
        fail(errc::not_a_filling, "depth placement is not a content filling: " + issues_to_string(bad));
    return t;
}

// --- contraction -------------------------------------------------------------------------

namespace {

// piecewise-linear remap of old boundary abscissas onto new slots
rat64 remap_x(rat64 x, const std::vector<rat64>& at_old_integer) {
    const int m = int(at_old_integer.size());  // value at old x = 1..m
    if (m == 0) return x;
    if (x <= rat64(1)) return at_old_integer[0] + (x - rat64(1));
    if (x >= rat64(m)) return at_old_integer[m - 1] + (x - rat64(m));
    std::int64_t k = x.num / x.den;  // floor for positive rationals
    rat64 lo = at_old_integer[k - 1], hi = at_old_integer[std::min<std::int64_t>(k, m - 1)];
    rat64 frac = x - rat64(k);
    return lo + (hi - lo) * frac;
}

std::vector<std::pair<rat64, rat64>> cup_waypoints(std::pair<rat64, rat64> a, std::pair<rat64, rat64> c) {
    // flat semicircle look-alike over the wall between two boundary vertices
    rat64 lo = std::min(a.first, c.first), hi = std::max(a.first, c.first);
    rat64 radius = (hi - lo) / rat64(2);
    rat64 mid = (lo + hi) / rat64(2);
    rat64 lift = radius * rat64(6, 7);
    std::vector<std::pair<rat64, rat64>> pts = {{lo + radius / rat64(2), lift}, {mid, radius}, {hi - radius / rat64(2), lift}};
    if (a.first > c.first) std::reverse(pts.begin(), pts.end());
    return pts;
}

}  // namespace

web contract_minus_pairs(const web& w, const pair_map& pm, const sign_string& s) {
    const int m = w.boundary_count();
    if (int(pm.spans.size()) != int(s.size()))
        fail(errc::wrong_shape, "pair map covers " + std::to_string(pm.spans.size()) + " positions, sign string has " +
                                    std::to_string(s.size()));
    {
        int next = 1;
        for (size_t p = 0; p < s.size(); ++p) {
            int want = s[p] == sign::minus ? 2 : 1;
            if (pm.spans[p].count != want || pm.spans[p].first != next)
                fail(errc::pair_not_adjacent, "pair map labels do not tile 1.." + std::to_string(m) +
                                                  " at position " + std::to_string(p + 1));
            next += want;
        }
        if (next != m + 1)
            fail(errc::wrong_shape, "pair map labels end at " + std::to_string(next - 1) + ", boundary has " +
                                        std::to_string(m));
    }

    web_builder old = deconstruct(w);

    auto boundary_edge = [&](int v) {
        int found = -1;
        for (int e = 0; e < int(old.edges.size()); ++e)
            if (old.edges[e].from == v || old.edges[e].to == v) {
                if (found != -1) fail(errc::boundary_vertex_malformed,
                                      "boundary vertex " + std::to_string(v + 1) + " has several edges");
                found = e;
            }
        if (found == -1)
            fail(errc::boundary_vertex_malformed, "boundary vertex " + std::to_string(v + 1) + " has no edge");
        return found;
    };

    const int new_m = int(s.size());
    std::vector<int> new_id(w.vertex_count(), -1);
    std::vector<bool> drop_edge(old.edges.size(), false);
    std::vector<bool> promoted(w.vertex_count(), false);

    for (int p = 0; p < new_m; ++p) {
        const label_span& span = pm.spans[p];
        if (s[p] == sign::plus) {
            new_id[span.first - 1] = p;
            continue;
        }
        int va = span.first - 1, vb = span.first;  // 0-based ids of labels a, a+1
        int ea = boundary_edge(va), eb = boundary_edge(vb);
        auto other = [&](int e, int v) { return old.edges[e].from == v ? old.edges[e].to : old.edges[e].from; };
        int na = other(ea, va), nb = other(eb, vb);
        if (na != nb || na < m || w.kinds[na] != vertex_kind::internal_sink || promoted[na])
            fail(errc::pair_not_coincident,
                 "labels (" + std::to_string(span.first) + "," + std::to_string(span.first + 1) +
                     ") do not meet at one internal sink");
        promoted[na] = true;
        new_id[na] = p;
        drop_edge[ea] = drop_edge[eb] = true;
    }

    web_builder nb;
    nb.signs = s;
    for (int v = m; v < w.vertex_count(); ++v)
        if (!promoted[v]) {
            new_id[v] = new_m + int(nb.internal_kinds.size());
            nb.add_internal(w.kinds[v]);
        }

    std::vector<int> new_edge_id(old.edges.size(), -1);
    for (int e = 0; e < int(old.edges.size()); ++e)
        if (!drop_edge[e]) {
            int from = new_id[old.edges[e].from], to = new_id[old.edges[e].to];
            if (from < 0 || to < 0) fail(errc::internal_invariant, "surviving edge touches a deleted vertex");
            new_edge_id[e] = nb.add_edge(from, to);
        }
    for (int v = m; v < w.vertex_count(); ++v) {
        if (promoted[v]) continue;
        std::vector<int> cyc;
        for (int e : old.rotations[v - m])
            if (!drop_edge[e]) cyc.push_back(new_edge_id[e]);
        nb.set_rotation(new_id[v], std::move(cyc));
    }

    if (w.geom) {
        geometry g;
        g.vertex_pos.resize(new_m + nb.internal_kinds.size());
        std::vector<rat64> slot_of_old(m);  // new abscissa for each old boundary position
        for (int p = 0; p < new_m; ++p) {
            const label_span& span = pm.spans[p];
            for (int k = 0; k < span.count; ++k) slot_of_old[span.first - 1 + k] = rat64(p + 1);
        }
        for (int p = 0; p < new_m; ++p) g.vertex_pos[p] = {rat64(p + 1), rat64(0)};
        for (int v = m; v < w.vertex_count(); ++v)
            if (!promoted[v]) {
                auto [x, y] = w.geom->vertex_pos[v];
                g.vertex_pos[new_id[v]] = {remap_x(x, slot_of_old), y};
            }
        nudge_collisions(g, size_t(new_m));
        g.edge_points.assign(nb.edges.size(), {});
        for (int e = 0; e < int(nb.edges.size()); ++e) {
            const web_edge& ed = nb.edges[e];
            if (ed.from < new_m && ed.to < new_m)
                g.edge_points[e] = cup_waypoints(g.vertex_pos[ed.from], g.vertex_pos[ed.to]);
        }
        nb.geom = std::move(g);
    }
    return nb.build();
}

// --- rotation & join -----------------------------------------------------------------------

web rotate(const web& w) {
    const int m = w.boundary_count();
    if (m <= 1) {
        web out = w;
        out.geom.reset();
        return out;
    }
    web_builder b = deconstruct(w);
    web_builder out;
    out.signs = rotate_left(w.signs);
    out.internal_kinds = b.internal_kinds;
    auto remap = [&](int v) { return v < m ? (v + m - 1) % m : v; };
    for (const web_edge& e : b.edges) out.add_edge(remap(e.from), remap(e.to));
    out.rotations = b.rotations;
    return out.build();
}

web join(const web& w1, const web& w2, int i) {
    const int m1 = w1.boundary_count(), m2 = w2.boundary_count();
    if (i < 0 || i > m1)
        fail(errc::index_out_of_range, "join position " + std::to_string(i) + " outside 0.." + std::to_string(m1));
    web_builder b1 = deconstruct(w1), b2 = deconstruct(w2);

    web_builder out;
    out.signs.assign(w1.signs.begin(), w1.signs.begin() + i);
    out.signs.insert(out.signs.end(), w2.signs.begin(), w2.signs.end());
    out.signs.insert(out.signs.end(), w1.signs.begin() + i, w1.signs.end());
    const int n1 = int(b1.internal_kinds.size());
    out.internal_kinds = b1.internal_kinds;
    out.internal_kinds.insert(out.internal_kinds.end(), b2.internal_kinds.begin(), b2.internal_kinds.end());

    auto remap1 = [&](int v) { return v < m1 ? (v < i ? v : v + m2) : v + m2; };
    auto remap2 = [&](int v) { return v < m2 ? v + i : v + m1 + n1; };
    for (const web_edge& e : b1.edges) out.add_edge(remap1(e.from), remap1(e.to));
    for (const web_edge& e : b2.edges) out.add_edge(remap2(e.from), remap2(e.to));
    const int e1 = int(b1.edges.size());
    out.rotations = b1.rotations;
    for (const auto& cyc : b2.rotations) {
        std::vector<int> shifted;
        for (int e : cyc) shifted.push_back(e + e1);
        out.rotations.push_back(std::move(shifted));
    }
    return out.build();
}

// --- canonical code ----------------------------------------------------------------------------

std::string canonical_code(const web& w) {
    const int m = w.boundary_count();
    std::string code = "W" + std::to_string(m) + ":" + format_signs(w.signs) + ":";
    if (w.darts.empty()) return code + "[]";

    std::vector<int> id(w.darts.size(), -1), order;
    order.reserve(w.darts.size());
    auto visit = [&](int d) {
        if (id[d] == -1) {
            id[d] = int(order.size());
            order.push_back(d);
        }
    };
    visit(m > 0 ? w.web_dart_of_boundary(0) : 0);
    for (size_t head = 0; head < order.size(); ++head) {
        int d = order[head];
        visit(w.darts[d].next);
        visit(w.darts[d].twin);
    }

    auto kind_char = [&](vertex_kind k) {
        switch (k) {
            case vertex_kind::boundary_source: return 'P';
            case vertex_kind::boundary_sink: return 'M';
            case vertex_kind::internal_source: return 'S';
            case vertex_kind::internal_sink: return 'K';
        }
        return '?';
    };
    for (int d : order) {
        const dart& dd = w.darts[d];
        code += std::to_string(id[dd.next]) + "," + std::to_string(id[dd.twin]) + ",";
        code += dd.wall ? 'w' : (dd.outward ? 'o' : 'i');
        code += kind_char(w.kinds[dd.vertex]);
        code += ';';
    }
    code += "B";
    for (int i = 0; i < m; ++i) code += std::to_string(id[w.web_dart_of_boundary(i)]) + ",";
    if (order.size() != w.darts.size())
        code += "!" + std::to_string(w.darts.size() - order.size());  // disconnected: not canonical
    return code;
}

// --- conveniences ---------------------------------------------------------------------------------

web empty_web() { return web{}; }

web cup_web(sign first) {
    web_builder b;
    b.signs = {first, first == sign::plus ? sign::minus : sign::plus};
    if (first == sign::plus) b.add_edge(0, 1);
    else b.add_edge(1, 0);
    geometry g;
    g.vertex_pos = {{rat64(1), rat64(0)}, {rat64(2), rat64(0)}};
    g.edge_points.assign(1, {});
    g.edge_points[0] = {{rat64(5, 4), rat64(3, 7)}, {rat64(3, 2), rat64(1, 2)}, {rat64(7, 4), rat64(3, 7)}};
    if (first == sign::minus) std::reverse(g.edge_points[0].begin(), g.edge_points[0].end());
    b.geom = std::move(g);
    return b.build();
}

}  // namespace sl3web
