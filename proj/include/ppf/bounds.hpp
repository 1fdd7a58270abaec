#pragma once

#include <complex>
#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "ppf/carlitz.hpp"
#include "ppf/cyclotomic.hpp"
#include "ppf/permpoly.hpp"

namespace ppf {

/// Multiplicative character chi^power where chi has order ell | q-1,
/// chi(xi^k) = e^{2 pi i k / ell} and chi(0) = 0.
struct CharSpec {
  std::uint32_t ell = 1;
  std::uint32_t power = 1;
};

std::complex<double> char_eval(const FieldCtx& f, const CharSpec& spec, Elem x);

struct WeilSum {
  std::complex<double> value;
  bool nontrivial = false;  // the character composition is non-trivial
  double bound = 0;         // 2 sqrt(q)
  bool weil_ok = true;      // |value| <= bound + 1e-6 when nontrivial
};

/// S = sum_c (chi(ac+b) conj(chi)(cc+d) conj(chi)(c^r))^power, with the Weil
/// bound asserted whenever the composition is a non-trivial character of a
/// non-power rational function.
WeilSum weil_sum(const FieldCtx& f, const CharSpec& spec, Elem alpha, Elem beta, Elem gamma,
                 Elem delta, std::uint32_t r);

struct TheoremReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> findings;
  nlohmann::json data;

  nlohmann::json to_json() const;
};

/// Theorem-1 harness: asserts the proof-level bound
/// N_max <= max{3 Ind, sqrt(3q), L, I} and, when the exact oracle reaches q,
/// Crk >= q - max{...} (non-strict; strict-form equality cases are reported
/// as findings). Requires a permutation.
TheoremReport verify_thm1(const FieldCtx& f, const PermPoly& poly,
                          CarlitzOracle* oracle = nullptr,
                          std::uint32_t oracle_limit = CarlitzOracle::kDefaultLimit);

/// Theorem-2 harness for cyclotomic permutations with all a_i in one coset:
/// N_max <= max{3 sqrt(q), L, I}, the rank bound, and the proof's count
/// estimate N < q/ell + 2 sqrt(q) over the non-degenerate Moebius classes.
TheoremReport verify_thm2(const FieldCtx& f, const CycMap& m,
                          std::uint32_t oracle_limit = CarlitzOracle::kDefaultLimit);

/// Agreement-rate bounds for cyclotomic permutations: over Moebius classes
/// (exhaustive for q <= 9, otherwise sampled), nonzero agreement is at most
/// (r+1) ell when beta or gamma is nonzero and (q-r') ell when alpha or delta
/// is nonzero, minimized over the lifts r' of r mod (q-1)/ell.
TheoremReport verify_rate_bounds(const FieldCtx& f, const CycMap& m, std::size_t samples = 10000,
                                 std::uint64_t seed = 0x9e3779b9);

/// Degree and weight rank bounds: Crk >= q - deg - 1, and unless
/// f = a + b x^{q-2}, Crk > q/(w+2) - 1; both for deg >= 2.
TheoremReport verify_deg_weight_ineqs(const FieldCtx& f, const PermPoly& poly,
                                      CarlitzOracle* oracle = nullptr,
                                      std::uint32_t oracle_limit = CarlitzOracle::kDefaultLimit);

/// Streams one CSV row per permutation (all q! in lexicographic table order
/// when samples = 0, which needs q <= 8; otherwise a random sample), with
/// measures computed after f(0) = 0 normalization.
/// Columns: perm_id,table,deg,w,ind,lin,inv,nmax,crk_lb,crk_exact,thm1_pass,
/// ineq2_pass,ineq3_pass.
void scan_all(const FieldCtx& f, std::ostream& sink, std::size_t samples = 0,
              std::uint64_t seed = 0x9e3779b9);

/// Whether the table is a + b x^{q-2} for some a, b != 0 (the exclusion in
/// the weight bound).
bool is_shifted_inversion(const FieldCtx& f, std::span<const Elem> table);

}  // namespace ppf
