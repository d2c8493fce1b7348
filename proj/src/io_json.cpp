#include "sl3web/io_json.hpp"

#include <string>

namespace sl3web {

using nlohmann::json;

nlohmann::json rat_to_json(rat64 q) { return q.str(); }

rat64 rat_from_json(const json& j) {
    if (j.is_number_integer()) return rat64(j.get<std::int64_t>());
    if (!j.is_string()) fail(errc::bad_web_json, "rational must be an integer or a \"p/q\" string");
    const std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat64(std::stoll(s));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 0) fail(errc::bad_web_json, "zero denominator in \"" + s + "\"");
        return rat64(std::stoll(s.substr(0, slash)), den);
    } catch (const op_error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_web_json, "unreadable rational \"" + s + "\"");
    }
}

nlohmann::json tableau_to_json(const tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    return json{{"rows", rows}};
}

tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        fail(errc::bad_tableau_text, "tableau JSON wants {\"rows\": [[...], ...]}");
    tableau t;
    for (const json& row : j["rows"]) {
        if (!row.is_array()) fail(errc::bad_tableau_text, "tableau row is not an array");
        std::vector<int> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) fail(errc::bad_tableau_text, "tableau entry is not an integer");
            r.push_back(v.get<int>());
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

nlohmann::json sign_to_json(const sign_string& s) { return json{{"sign", format_signs(s)}}; }

sign_string sign_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sign") || !j["sign"].is_string())
        fail(errc::bad_sign_text, "sign JSON wants {\"sign\": \"++-\"}");
    return parse_signs(j["sign"].get<std::string>());
}

nlohmann::json mdiagram_to_json(const m_diagram& md) {
    json left = json::array(), right = json::array();
    for (const arc& a : md.left) left.push_back({a.a, a.b});
    for (const arc& a : md.right) right.push_back({a.a, a.b});
    return json{{"points", md.points}, {"left", left}, {"right", right}};
}

m_diagram mdiagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("left") || !j.contains("right"))
        fail(errc::bad_web_json, "chord diagram JSON wants {\"points\", \"left\", \"right\"}");
    m_diagram md;
    md.points = j["points"].get<int>();
    auto read_arcs = [&](const json& arr, std::vector<arc>& out) {
        for (const json& pair : arr) {
            if (!pair.is_array() || pair.size() != 2) fail(errc::bad_web_json, "arc wants [a, b]");
            out.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    };
    read_arcs(j["left"], md.left);
    read_arcs(j["right"], md.right);
    return md;
}

namespace {

const char* kind_name(vertex_kind k) {
    switch (k) {
        case vertex_kind::boundary_source: return "boundary_source";
        case vertex_kind::boundary_sink: return "boundary_sink";
        case vertex_kind::internal_source: return "internal_source";
        case vertex_kind::internal_sink: return "internal_sink";
    }
    return "?";
}

vertex_kind kind_from_name(const std::string& name) {
    if (name == "boundary_source") return vertex_kind::boundary_source;
    if (name == "boundary_sink") return vertex_kind::boundary_sink;
    if (name == "internal_source") return vertex_kind::internal_source;
    if (name == "internal_sink") return vertex_kind::internal_sink;
    fail(errc::bad_web_json, "unknown vertex kind \"" + name + "\"");
}

json point_to_json(const std::pair<rat64, rat64>& p) {
    return json::array({rat_to_json(p.first), rat_to_json(p.second)});
}

std::pair<rat64, rat64> point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) fail(errc::bad_web_json, "point wants [x, y]");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

}  // namespace

nlohmann::json web_to_json(const web& w) {
    json vertices = json::array();
    for (int v = 0; v < w.vertex_count(); ++v)
        vertices.push_back({{"id", v}, {"kind", kind_name(w.kinds[v])}});
    json edges = json::array();
    for (const web_edge& e : w.edges) edges.push_back({{"from", e.from}, {"to", e.to}});
    json rotations = json::object();
    for (int v = w.boundary_count(); v < w.vertex_count(); ++v) {
        json cyc = json::array();
        for (int d : w.darts_of_vertex(v)) cyc.push_back(w.darts[d].edge);
        rotations[std::to_string(v)] = cyc;
    }
    json out{{"sign", format_signs(w.signs)},
             {"vertices", vertices},
             {"edges", edges},
             {"rotations", rotations}};
    if (w.geom) {
        json vp = json::array(), ep = json::array();
        for (const auto& p : w.geom->vertex_pos) vp.push_back(point_to_json(p));
        for (const auto& pts : w.geom->edge_points) {
            json line = json::array();
            for (const auto& p : pts) line.push_back(point_to_json(p));
            ep.push_back(line);
        }
        out["geometry"] = json{{"vertex_pos", vp}, {"edge_points", ep}};
    }
    return out;
}

web web_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sign") || !j["sign"].is_string() || !j.contains("vertices") ||
        !j.contains("edges"))
        fail(errc::bad_web_json, "web JSON wants {\"sign\", \"vertices\", \"edges\", \"rotations\"}");
    web_builder b;
    try {
        b.signs = parse_signs(j["sign"].get<std::string>());
    } catch (const op_error& e) {
        fail(errc::bad_web_json, e.what());
    }
    const int m = int(b.signs.size());

    if (!j["vertices"].is_array()) fail(errc::bad_web_json, "\"vertices\" is not an array");
    int next_id = 0;
    for (const json& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("kind"))
            fail(errc::bad_web_json, "vertex wants {\"id\", \"kind\"}");
        if (v["id"].get<int>() != next_id)
            fail(errc::bad_web_json, "vertex ids must run 0,1,2,... in order; saw " +
                                         v["id"].dump() + " at slot " + std::to_string(next_id));
        vertex_kind k = kind_from_name(v["kind"].get<std::string>());
        if (next_id < m) {
            vertex_kind want =
                b.signs[next_id] == sign::plus ? vertex_kind::boundary_source : vertex_kind::boundary_sink;
            if (k != want)
                fail(errc::bad_web_json, "vertex " + std::to_string(next_id) + " kind contradicts the sign string");
        } else {
            if (is_boundary(k))
                fail(errc::bad_web_json, "vertex " + std::to_string(next_id) + " beyond the boundary is " +
                                             std::string(kind_name(k)));
            b.internal_kinds.push_back(k);
            b.rotations.emplace_back();
        }
        ++next_id;
    }
    if (next_id < m) fail(errc::bad_web_json, "fewer vertices than boundary signs");

    for (const json& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to"))
            fail(errc::bad_web_json, "edge wants {\"from\", \"to\"}");
        b.add_edge(e["from"].get<int>(), e["to"].get<int>());
    }

    if (j.contains("rotations")) {
        if (!j["rotations"].is_object()) fail(errc::bad_web_json, "\"rotations\" is not an object");
        for (const auto& [key, cyc] : j["rotations"].items()) {
            int v = -1;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                fail(errc::bad_web_json, "rotation key \"" + key + "\" is not a vertex id");
            }
            if (v < m || v >= next_id) fail(errc::bad_web_json, "rotation key " + key + " is not an internal vertex");
            if (!cyc.is_array()) fail(errc::bad_web_json, "rotation of vertex " + key + " is not an array");
            std::vector<int> order;
            for (const json& e : cyc) order.push_back(e.get<int>());
            b.rotations[v - m] = std::move(order);
        }
    }

    if (j.contains("geometry") && !j["geometry"].is_null()) {
        const json& gj = j["geometry"];
        if (!gj.is_object() || !gj.contains("vertex_pos") || !gj.contains("edge_points"))
            fail(errc::bad_web_json, "geometry wants {\"vertex_pos\", \"edge_points\"}");
        geometry g;
        for (const json& p : gj["vertex_pos"]) g.vertex_pos.push_back(point_from_json(p));
        for (const json& line : gj["edge_points"]) {
            std::vector<std::pair<rat64, rat64>> pts;
            for (const json& p : line) pts.push_back(point_from_json(p));
            g.edge_points.push_back(std::move(pts));
        }
        if (g.vertex_pos.size() != size_t(next_id) || g.edge_points.size() != b.edges.size())
            fail(errc::bad_web_json, "geometry tables do not match vertex/edge counts");
        b.geom = std::move(g);
    }

    try {
        return b.build();
    } catch (const op_error& e) {
        fail(errc::bad_web_json, std::string("web JSON does not assemble: ") + e.what());
    }
}

nlohmann::json report_to_json(const verification_report& r) {
    return json{{"check", r.check},
                {"subject", r.subject},
                {"filling_count", r.filling_count},
                {"web_count", r.web_count},
                {"round_trip_failures", r.round_trip_failures},
                {"distinctness_collisions", r.distinctness_collisions},
                {"ellipticity_violations", r.ellipticity_violations},
                {"tau_failures", r.tau_failures},
                {"rotation_mismatches", r.rotation_mismatches},
                {"join_mismatches", r.join_mismatches},
                {"elapsed_seconds", r.elapsed_seconds},
                {"success", r.success()}};
}

}  // namespace sl3web
