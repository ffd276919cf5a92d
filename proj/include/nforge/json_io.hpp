#ifndef NFORGE_JSON_IO_HPP
#define NFORGE_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "nforge/curve.hpp"
#include "nforge/good_semigroup.hpp"

namespace nforge {

using json = nlohmann::json;

/// {"branches": s, "conductor": [..], "small_elements": [[..], ..]},
/// canonical (sorted) form; round-trips bit-exactly.
json semigroup_to_json(const GoodSemigroup& S);
/// Accepts the canonical form or {"numerical_generators": [..]}.
GoodSemigroup semigroup_from_json(const json& j);

json curve_to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const json& j);

/// {"generators": ["1", "t*(t-1)^3", ...]} for global polynomial
/// generators, or {"generators": [["1","1"], ["t","u^3"], ...],
/// "pole_at_infinity": N} for per-branch prescribed generators.
SheafModel sheaf_from_json(const CurveSpec& curve, const json& j);

struct LoadedInput {
  std::optional<GoodSemigroup> semigroup;
  std::optional<CurveSpec> curve;
};

/// Sniffs the document kind by its keys.  ParseError on malformed input.
LoadedInput load_input_file(const std::string& path);

json load_json_file(const std::string& path);

}  // namespace nforge

#endif
