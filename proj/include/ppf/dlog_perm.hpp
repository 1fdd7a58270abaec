#pragma once

#include <optional>

#include "ppf/carlitz.hpp"
#include "ppf/permpoly.hpp"

namespace ppf {

/// Value table of the discrete-log permutation f(xi^i) = i+1, f(0) = 0.
/// Requires a prime field with p > 2. A non-default primitive element may be
/// supplied to test independence of the choice of xi.
std::vector<Elem> build_dlog_table(const FieldCtx& f, std::optional<Elem> xi = std::nullopt);

/// Closed-form coefficients: coefficient of c^i is (xi^{-i} - 1)^{-1} for
/// 1 <= i <= p-2. Equals the interpolation of build_dlog_table.
PermPoly dlog_coeffs(const FieldCtx& f, std::optional<Elem> xi = std::nullopt);

struct Thm3Report {
  std::uint32_t p = 0;
  Elem xi = 0;
  int deg = 0, w = 0;
  std::optional<std::uint32_t> ind;  // checked only for p > 3
  int lin = 0, inv = 0, nmax = 0;
  double lin_bound = 0, inv_bound = 0, nmax_bound = 0;
  int crk_lower = 0;
  double crk_bound = 0;  // p - 2 sqrt(p-2) - 1
  std::optional<int> crk_exact;
  bool deg_weight_ok = false, ind_ok = false, lin_ok = false, inv_ok = false,
       nmax_ok = false, crk_ok = false;
  bool pass = false;
};

/// Checks every claimed property of the discrete-log permutation: degree and
/// weight p-2, index p-1 (p > 3), the linearity / invertibility / agreement
/// bounds, and the Carlitz-rank bound (exact rank when the oracle reaches p).
Thm3Report verify_thm3(const FieldCtx& f, std::optional<Elem> xi = std::nullopt,
                       std::uint32_t oracle_limit = CarlitzOracle::kDefaultLimit);

}  // namespace ppf
