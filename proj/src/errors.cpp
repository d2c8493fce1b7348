#include "sl3web/errors.hpp"

namespace sl3web {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_sign_text: return "BadSignText";
        case errc::bad_tableau_text: return "BadTableauText";
        case errc::bad_web_json: return "BadWebJson";
        case errc::wrong_shape: return "WrongShape";
        case errc::row_not_weakly_increasing: return "RowNotWeaklyIncreasing";
        case errc::column_not_strictly_increasing: return "ColumnNotStrictlyIncreasing";
        case errc::wrong_content: return "WrongContent";
        case errc::not_standard: return "NotStandard";
        case errc::not_content_of_s: return "NotContentOfS";
        case errc::not_semistandard: return "NotSemistandard";
        case errc::missing_value: return "MissingValue";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::result_not_semistandard: return "ResultNotSemistandard";
        case errc::not_a_filling: return "NotAFilling";
        case errc::broken_involution: return "BrokenInvolution";
        case errc::broken_rotation: return "BrokenRotation";
        case errc::wall_path_broken: return "WallPathBroken";
        case errc::boundary_vertex_malformed: return "BoundaryVertexMalformed";
        case errc::internal_vertex_malformed: return "InternalVertexMalformed";
        case errc::mixed_orientation: return "MixedOrientation";
        case errc::edge_orientation_conflict: return "EdgeOrientationConflict";
        case errc::boundary_sign_mismatch: return "BoundarySignMismatch";
        case errc::not_connected: return "NotConnected";
        case errc::euler_formula_violated: return "EulerFormulaViolated";
        case errc::pair_not_coincident: return "PairNotCoincident";
        case errc::pair_not_adjacent: return "PairNotAdjacent";
        case errc::missing_geometry: return "MissingGeometry";
        case errc::circle_component: return "CircleComponent";
        case errc::small_face: return "SmallFace";
        case errc::internal_invariant: return "InternalInvariant";
    }
    return "UnknownError";
}

}  // namespace sl3web
