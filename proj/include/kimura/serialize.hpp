#pragma once

#include <json.hpp>

#include "kimura/fibration.hpp"
#include "kimura/group_algebra.hpp"
#include "kimura/matrix.hpp"
#include "kimura/motive.hpp"
#include "kimura/orbit.hpp"
#include "kimura/schur.hpp"

namespace kimura {

using Json = nlohmann::json;

// Rationals serialize as plain integers when integral, else "a/b" strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json kim_stats_to_json(const KimStats& s);

// [{kind, params, twist, mult}, ...]; Tate atoms normalize to twisted units
// on input.
Json motive_to_json(const FormalMotive& m);
FormalMotive motive_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);

Json idempotent_report_to_json(const IdempotentReport& report);

// {"parts": {"-1": [[..]], ...}} plus the block shape.
Json orbit_morphism_to_json(const OrbitMorphism& f);

// Anonymous domain/codomain objects are synthesized from the matrix shape,
// which must agree across parts.
OrbitMorphism orbit_morphism_from_json(const Json& j);

// Batch record: {"d", "genus" | "custom_sdim", "crit", "cover_genus"?,
// "algebraically_closed"?, "char_not_2"?, "projective"?}.
FibrationSpec fibration_spec_from_json(const Json& j);
Json fibration_spec_to_json(const FibrationSpec& spec);

}  // namespace kimura
