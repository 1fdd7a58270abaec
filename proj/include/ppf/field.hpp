#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppf/error.hpp"

namespace ppf {

/// Element of F_q as a dense integer code in [0, q).
/// For k > 1 the element sum a_j x^j encodes as sum a_j p^j.
using Elem = std::uint32_t;

/// Immutable finite-field context with exp/log tables and a primitive
/// element. All arithmetic after construction is table-lookup based
/// (q <= 2^20 keeps both tables in memory). Safe to share across threads.
class FieldCtx {
 public:
  /// Builds F_{p^k}. For k > 1 a monic irreducible modulus (ascending
  /// coefficients, length k+1) may be supplied; when omitted, the smallest
  /// monic irreducible is used for p^k <= 2^16, k <= 4.
  static FieldCtx make(std::uint32_t p, std::uint32_t k = 1,
                       std::vector<std::uint32_t> modulus = {});

  /// Builds a field of order q, factoring q = p^k.
  static FieldCtx from_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  Elem xi() const { return xi_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// "q=5" for prime fields, "p=3,k=2,mod=1,0,1" otherwise.
  std::string spec() const;

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : q_ - a;
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }

  /// a^e with the exponent reduced mod q-1 for a != 0; 0^0 = 1, 0^e = 0.
  Elem pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = (std::uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1);
    return exp_[r];
  }

  Elem inv(Elem a) const {
    if (a == 0) fail(errc::zero_inverse, "inverse of zero");
    return inv_[a];
  }

  /// Inversion extended by 0 -> 0, i.e. the permutation x^{q-2}.
  Elem inv0(Elem a) const { return a == 0 ? 0 : inv_[a]; }

  /// Discrete log base xi; table lookup.
  std::uint32_t dlog(Elem a) const {
    if (a == 0) fail(errc::zero_log, "log of zero");
    return log_[a];
  }

  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Direct modular / polynomial multiplication, bypassing the tables.
  Elem mul_direct(Elem a, Elem b) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(Elem a) const;

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

 private:
  FieldCtx() = default;

  Elem add_ext(Elem a, Elem b) const;
  Elem neg_ext(Elem a) const;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;  // ascending; empty when k == 1
  Elem xi_ = 0;
  std::vector<std::uint32_t> exp_;  // size q-1, exp_[i] = xi^i
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
  std::vector<std::uint32_t> inv_;  // size q, inv_[0] unused
};

}  // namespace ppf
