#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl3web/errors.hpp"
#include "sl3web/mdiagram.hpp"
#include "sl3web/rational.hpp"
#include "sl3web/sign_string.hpp"
#include "sl3web/tableau.hpp"

namespace sl3web {

enum class vertex_kind : std::uint8_t {
    boundary_source,  // sign '+': one outgoing web edge
    boundary_sink,    // sign '-': one incoming web edge
    internal_source,  // trivalent, all out
    internal_sink,    // trivalent, all in
};

inline bool is_boundary(vertex_kind k) {
    return k == vertex_kind::boundary_source || k == vertex_kind::boundary_sink;
}
inline bool is_source(vertex_kind k) {
    return k == vertex_kind::boundary_source || k == vertex_kind::internal_source;
}

// Half-edge of the map. Web edge e owns darts 2e (at `from`, outward) and
// 2e+1 (at `to`); wall darts follow all web darts.
struct dart {
    int twin = -1;
    int next = -1;  // ccw successor around the same vertex
    int vertex = -1;
    int edge = -1;  // web edge index; -1 for wall darts
    bool wall = false;
    bool outward = false;  // web darts only: edge points away from `vertex`
    friend bool operator==(const dart&, const dart&) = default;
};

struct web_edge {
    int from = -1, to = -1;  // oriented source-side -> sink-side
    friend bool operator==(const web_edge&, const web_edge&) = default;
};

// Exact layout for rendering; carried only by pipeline-built webs.
struct geometry {
    std::vector<std::pair<rat64, rat64>> vertex_pos;                 // per vertex
    std::vector<std::vector<std::pair<rat64, rat64>>> edge_points;   // per edge: interior waypoints
    friend bool operator==(const geometry&, const geometry&) = default;
};

// Planar combinatorial map of an sl3 web: boundary vertices 0..m-1 in wall
// order (univalent into the web), trivalent oriented internal vertices, plus
// the impassable wall path linking consecutive boundary vertices. Boundary
// rotation is always ccw (wall-to-next, web dart, wall-to-prev), i.e. the web
// lives in the upper half plane above the wall.
struct web {
    sign_string signs;
    std::vector<vertex_kind> kinds;  // boundary vertices first
    std::vector<web_edge> edges;
    std::vector<dart> darts;
    std::vector<int> vertex_dart;  // one dart id per vertex (-1 if isolated)
    std::optional<geometry> geom;

    int boundary_count() const { return int(signs.size()); }
    int vertex_count() const { return int(kinds.size()); }
    int edge_count() const { return int(edges.size()); }

    std::vector<int> darts_of_vertex(int v) const;  // ccw order from vertex_dart
    int web_dart_of_boundary(int i) const;          // unique non-wall dart at boundary i

    friend bool operator==(const web&, const web&) = default;
};

// --- assembly ---------------------------------------------------------------

// Collects boundary signs, internal vertices, oriented edges, and ccw edge
// cycles at internal vertices, then materializes darts and the wall. Throws
// op_error when the description isn't a buildable map (degree mismatches,
// dangling endpoints, self-loops).
struct web_builder {
    sign_string signs;
    std::vector<vertex_kind> internal_kinds;
    std::vector<web_edge> edges;
    std::vector<std::vector<int>> rotations;  // ccw edge ids per internal vertex
    std::optional<geometry> geom;

    int add_internal(vertex_kind k);       // returns vertex id
    int add_edge(int from, int to);        // returns edge id
    void set_rotation(int internal_vertex, std::vector<int> ccw_edges);
    web build() const;
};

// Inverse of building: the minimal description of an existing web,
// vertex ids unchanged. Used by the surgery operations.
web_builder deconstruct(const web& w);

// --- construction from an m-diagram ------------------------------------------

// Replace each m by a Y (branch vertex a sink above the middle point), resolve
// every crossing into a sink fed by the two boundary-side strand halves and a
// source emitting the middle-side halves with a transversal source->sink edge.
// Boundary is all plus; exact layout geometry attached.
web web_from_m_diagram(const m_diagram& md);

// --- faces & depth -----------------------------------------------------------

struct face_table {
    int count = 0;
    int outer = -1;                // orbit holding the underside wall darts
    std::vector<int> face_of;      // per dart
    std::vector<int> degree;       // darts per face
    std::vector<int> wall_degree;  // wall darts per face
    std::vector<int> sample;       // one dart per face
};

// Orbits of d -> twin(next(d)); each face lies to the left of its darts.
face_table faces(const web& w);  // throws on broken dart permutations

struct depth_map {
    face_table ft;
    std::vector<int> depth;       // per face: BFS distance from outer across web edges
    std::vector<int> gap_depths;  // m+1 boundary gaps, west of b1 .. east of bm

    int left_face(const web& w, int i) const;   // face west of boundary i's edge
    int right_face(const web& w, int i) const;  // face east of it
};

depth_map compute_depths(const web& w);

// --- validation ---------------------------------------------------------------

// Structural + semantic invariants, every failure named: involution/rotation
// integrity, wall path, univalent boundary matching its sign, uniform trivalent
// internal orientation, connectivity through the wall, Euler count V-E+F = 2.
std::vector<issue> validate_web(const web& w);

// Non-ellipticity: no component without a boundary vertex (closed circle), no
// internal face bounded by fewer than 6 web edges (bigons, squares).
std::vector<issue> ellipticity_violations(const web& w);
inline bool is_non_elliptic(const web& w) { return ellipticity_violations(w).empty(); }

// --- the semistandard inverse --------------------------------------------------

// Reads the tableau back off the face depths flanking each boundary vertex:
// sinks place their doubled value in columns {1,2}, {1,3}, {2,3} and sources in
// column 1, 2, 3 as the west depth is less than / equal to / greater than the
// east depth.
tableau web_to_tableau(const web& w);  // throws not_a_filling

// --- surgery -------------------------------------------------------------------

// Deletes each contracted pair of boundary vertices (labels (a,a+1) from the
// pair map) together with their edges; the shared internal sink becomes the
// boundary sink at that sign position. Throws pair_not_coincident when the two
// vertices do not meet at one internal vertex (would contradict the tau-lemma).
web contract_minus_pairs(const web& w, const pair_map& pm, const sign_string& s);

// One step of disk rotation: the wall edge b1-b2 opens, a wall edge bm-b1
// closes through the old outer region, labels shift down (old b1 becomes last).
// Graph, orientations and internal rotations are untouched; geometry drops.
web rotate(const web& w);

// Splices w2's boundary between positions i and i+1 of w1 (i = 0..m1) and
// rebuilds the wall; signs concatenate. Geometry drops.
web join(const web& w1, const web& w2, int i);  // throws index_out_of_range

// --- identification --------------------------------------------------------------

// Deterministic BFS over (next, twin) from boundary vertex 1's web dart,
// emitting the normalized dart table, vertex kinds, signs, and the boundary
// anchor darts. Two webs get equal codes iff some isomorphism of embedded
// oriented maps matches them preserving boundary labels: such an isomorphism
// must send start dart to start dart and commutes with next/twin, so it forces
// identical BFS tables; conversely equal tables define the isomorphism.
std::string canonical_code(const web& w);

// --- conveniences -----------------------------------------------------------------

inline const sign_string& boundary_signs(const web& w) { return w.signs; }

web empty_web();
// cup over "-+" or "+-" (single edge between the two boundary vertices)
web cup_web(sign first);

}  // namespace sl3web
