#pragma once

#include <json.hpp>

#include "sl3web/bijection.hpp"
#include "sl3web/mdiagram.hpp"
#include "sl3web/tableau.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

// Rationals travel as strings "p" or "p/q"; plain JSON integers are accepted on input.
nlohmann::json rat_to_json(rat64 q);
rat64 rat_from_json(const nlohmann::json& j);  // throws bad_web_json

nlohmann::json tableau_to_json(const tableau& t);          // {"rows": [[...], ...]}
tableau tableau_from_json(const nlohmann::json& j);        // throws bad_tableau_text

nlohmann::json sign_to_json(const sign_string& s);         // {"sign": "++-"}
sign_string sign_from_json(const nlohmann::json& j);       // throws bad_sign_text

nlohmann::json mdiagram_to_json(const m_diagram& md);      // {"points", "left", "right"}
m_diagram mdiagram_from_json(const nlohmann::json& j);     // throws bad_web_json

// {"sign", "vertices": [{"id","kind"}], "edges": [{"from","to"}],
//  "rotations": {"<internal id>": [edge ids ccw]}, "geometry": optional
//  {"vertex_pos": [[x,y],...], "edge_points": [[[x,y],...],...]}}
nlohmann::json web_to_json(const web& w);
web web_from_json(const nlohmann::json& j);                // throws bad_web_json

nlohmann::json report_to_json(const verification_report& r);

}  // namespace sl3web
