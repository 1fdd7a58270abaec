#pragma once

#include <json.hpp>

#include "ppf/carlitz.hpp"
#include "ppf/cyclotomic.hpp"
#include "ppf/permpoly.hpp"

namespace ppf {

nlohmann::json moebius_json(const MoebiusMap& m);
nlohmann::json witness_json(const CycMap& m);

/// Full measure report for one polynomial: degree, weight, index, linearity,
/// invertibility, max Moebius agreement, Carlitz rank bounds and (when the
/// oracle reaches q) the exact rank with a witness chain for ranks <= 1.
nlohmann::json analyze(const FieldCtx& f, const PermPoly& poly,
                       std::uint32_t oracle_limit = CarlitzOracle::kDefaultLimit);

}  // namespace ppf
