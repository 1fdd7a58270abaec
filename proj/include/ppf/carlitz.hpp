#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ppf/field.hpp"

namespace ppf {

/// Fractional linear map x -> (ax+b)/(cx+d) with ad != bc, stored canonical:
/// the first nonzero of (a,b,c,d) is scaled to 1, so each projective class
/// has a unique representative.
struct MoebiusMap {
  Elem a = 1, b = 0, c = 0, d = 1;

  static MoebiusMap canonical(const FieldCtx& f, Elem a, Elem b, Elem c, Elem d);

  /// Value at x, or nullopt at the pole cx+d = 0.
  std::optional<Elem> eval(const FieldCtx& f, Elem x) const;

  /// Base-q positional packing; orders keys lexicographically by (a,b,c,d).
  std::uint64_t key(std::uint32_t q) const {
    return (((std::uint64_t)a * q + b) * q + c) * q + d;
  }

  bool operator==(const MoebiusMap&) const = default;
};

/// Coefficients (c_0, ..., c_{n+1}) of the chain
///   P_n(x) = (...((c_0 x + c_1)^{q-2} + c_2)^{q-2} ... + c_n)^{q-2} + c_{n+1},
/// with c_i != 0 for i = 0 and i = 2..n. n = 0 is the affine map c_0 x + c_1.
struct CarlitzChain {
  std::vector<Elem> c;
  int inversions() const { return (int)c.size() - 2; }
};

/// Value table of P_n; always a permutation.
std::vector<Elem> chain_eval(const FieldCtx& f, const CarlitzChain& ch);

struct ChainMoebius {
  MoebiusMap map;
  std::vector<Elem> poles;  // inputs where some intermediate inversion gets 0
};

/// The fractional linear map the chain agrees with outside its <= n poles.
ChainMoebius chain_to_moebius(const FieldCtx& f, const CarlitzChain& ch);

/// |{c : cc+d != 0 and f(c) = (ac+b)/(cc+d)}|.
int agreement_count(const FieldCtx& f, std::span<const Elem> table, const MoebiusMap& m);

struct AgreementMax {
  int nmax = 0;
  MoebiusMap argmax;
};

/// Exact maximum of agreement_count over all Moebius maps, via the unique map
/// through each input triple (O(q^3) with hashing). Ties broken by the
/// lexicographically smallest canonical quadruple. Requires a permutation.
AgreementMax max_agreement(const FieldCtx& f, std::span<const Elem> table);

/// Brute force over all q^3 - q projective classes, optionally filtered.
/// Test oracle for max_agreement and for the restricted-family bounds.
AgreementMax max_agreement_bruteforce(
    const FieldCtx& f, std::span<const Elem> table,
    const std::function<bool(const MoebiusMap&)>& filter = nullptr);

/// Enumerates all canonical representatives of PGL(2, q).
void for_each_moebius(const FieldCtx& f, const std::function<void(const MoebiusMap&)>& fn);

/// max_a |{c : f(c) = ac}|. Requires f(0) = 0; c = 0 matches every a.
int linearity(const FieldCtx& f, std::span<const Elem> table);

/// max_c |{x != 0 : f(x) = c/x}|.
int invertibility(const FieldCtx& f, std::span<const Elem> table);

/// max(0, q - N_max): Crk(f) >= q - N for any Moebius agreement N.
int crk_lower_bound(const FieldCtx& f, std::span<const Elem> table);

/// Lehmer-code rank of a permutation of {0..q-1}; q <= 20.
std::uint64_t perm_rank(std::span<const Elem> table);

/// Exact Carlitz rank by layered closure over left AGL(1,q)-cosets:
/// S_0 = AGL, S_{k+1} = AGL . inv . S_k. States are cosets, stored by the
/// rank of the lexicographically smallest coset member. Depth per state is
/// cached, so repeated queries share the expansion.
class CarlitzOracle {
 public:
  static constexpr std::uint32_t kDefaultLimit = 11;

  explicit CarlitzOracle(const FieldCtx& f, std::uint32_t limit_q = kDefaultLimit);

  /// Minimum number of inversions for this permutation.
  int rank_of(std::span<const Elem> table);

  /// Expands the full closure; returns the maximum Carlitz rank over F_q.
  int max_rank();

  /// Number of canonical states discovered so far.
  std::size_t states() const { return nstates_; }

  const FieldCtx& field() const { return f_; }

 private:
  std::vector<Elem> canonical(std::span<const Elem> table) const;
  bool expand_layer();  // false once the closure is complete

  const FieldCtx& f_;
  std::uint32_t q_;
  std::vector<std::int8_t> depth_;  // indexed by permutation rank; -1 unseen
  std::vector<std::vector<Elem>> frontier_;
  int cur_depth_ = 0;
  std::size_t nstates_ = 0;
  bool done_ = false;
};

/// Convenience wrapper; builds a throwaway oracle.
int crk_exact(const FieldCtx& f, std::span<const Elem> table,
              std::uint32_t limit_q = CarlitzOracle::kDefaultLimit);

/// Witness chain for ranks <= 1, by direct search over (c0, c1) and
/// (c0, c1, c2). Empty when the rank exceeds 1.
std::optional<CarlitzChain> chain_witness_upto1(const FieldCtx& f, std::span<const Elem> table);

}  // namespace ppf
