#pragma once

#include <string>

#include "wct/mesh.hpp"

namespace wct {

/// Min/Max table of h/R, face angle, dihedral angle and R/l. Angles are
/// rounded to 2 decimals and ratios to 3, followed by the counts and the
/// well-centeredness classification.
std::string format_table(const QualityReport& r);

/// JSON document with "schema_version": 1, the four ranges with the tets
/// (index and vertices) where each extreme occurs, counts and the
/// classification flags.
std::string format_json(const TetMesh& m, const QualityReport& r);

}  // namespace wct
