#pragma once

#include <string>

#include "sl3web/rational.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

struct render_spec {
    enum class output { svg, tikz };
    output format = output::svg;
    rat64 scale = rat64(1);  // must be positive
    bool label_depths = false;
    bool label_signs = true;
};

// Emit an SVG 1.1 document or a tikzpicture environment for a web that carries
// geometry: dashed boundary line, one mark+label per boundary vertex, one filled
// dot per internal vertex, every edge drawn through its waypoints with a midpoint
// arrowhead; with label_depths, each boundary gap is annotated with its depth.
// Throws op_error(missing_geometry) when the web has no geometry.
std::string render_web(const web& w, const render_spec& spec);

}  // namespace sl3web
