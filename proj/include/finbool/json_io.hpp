#pragma once

#include <string>

#include "json.hpp"

#include "finbool/algebra.hpp"
#include "finbool/cantor.hpp"
#include "finbool/independence.hpp"
#include "finbool/mask.hpp"
#include "finbool/measure.hpp"
#include "finbool/rational.hpp"

namespace finbool {

using Json = nlohmann::json;

// Set: array of element indices, or a hex string "0x..." whose bit i marks
// element i.
Json mask_to_json(const Mask& m);
Mask mask_from_json(const Json& j, std::size_t ground);

// {"ground": N, "sets": [...]}
Json family_to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);

// {"coords": T, "patterns": ["0101", ...]}, character j of each string being
// the value at coordinate j.
Json patterns_to_json(const PatternFamily& c);
PatternFamily patterns_from_json(const Json& j);

// {"algebra": {"ground": N, "sets": [atoms...]}, "weights": ["1/8", ...]}
Json measure_to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

// {"m": 36, "phi": [[0,3],...], "x": "bits"}; phi lists [anchor, image]
// pairs, unlisted anchors map to themselves; x reads left to right from
// position 0 and may be shorter than m (padded with zeros).
Json cantor_params_to_json(const CantorParams& p);
CantorParams cantor_params_from_json(const Json& j);

// {"dom": [i,...], "val": "bits"}; val characters line up with dom entries.
Json cylinder_to_json(const Cylinder& c);
Cylinder cylinder_from_json(const Json& j, std::uint32_t m);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Wraps nlohmann parsing so failures surface as input_error with position.
Json parse_json_text(const std::string& text);

}  // namespace finbool
