#pragma once

#include <json.hpp>

#include "adjq/adjusted.hpp"
#include "adjq/comonotone.hpp"
#include "adjq/harness.hpp"

namespace adjq {

// JSON schemas. Handicap values carry an explicit "inf" ("-inf") string token
// for the infinite tail: the maximal form is +infinity above its last cut,
// the minimal form -infinity below its first cut.
//
//   StepCDF        {"breakpoints":[...],"levels":[...]}   (canonical form required)
//   ShapeFn        {"jump_points":[...],"jump_levels":[...]}
//   DualShapeFn    {"base_level":v,"jump_points":[...],"jump_levels":[...]}
//   HandicapFn     {"cut_points":[...],"values":[...,"inf"]}
//   DualHandicapFn {"cut_points":[...],"values":["-inf",...]}
//   FiniteJoint    {"outcomes":[[p,x,y],...]}

nlohmann::json to_json(const StepCDF& f);
nlohmann::json to_json(const ShapeFn& shape);
nlohmann::json to_json(const HandicapFn& handicap);
nlohmann::json to_json(const DualShapeFn& shape);
nlohmann::json to_json(const DualHandicapFn& handicap);
nlohmann::json to_json(const FiniteJoint& joint);
nlohmann::json to_json(const CheckReport& report);

StepCDF step_cdf_from_json(const nlohmann::json& j);
ShapeFn shape_from_json(const nlohmann::json& j);
HandicapFn handicap_from_json(const nlohmann::json& j);
DualShapeFn dual_shape_from_json(const nlohmann::json& j);
DualHandicapFn dual_handicap_from_json(const nlohmann::json& j);
FiniteJoint joint_from_json(const nlohmann::json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace adjq
