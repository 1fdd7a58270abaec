#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ppf/field.hpp"

namespace ppf {

/// Cyclotomic cosets C_i = xi^i C_0 for a divisor ell of q-1, where C_0 is
/// the subgroup of nonzero ell-th powers.
struct CosetStructure {
  std::uint32_t ell = 1;
  std::vector<std::uint32_t> coset_of;  // indexed by element code; [0] unused

  static CosetStructure make(const FieldCtx& f, std::uint32_t ell);
  std::uint32_t of(Elem x) const { return coset_of[x]; }
};

/// r-th order cyclotomic mapping of index ell: 0 -> 0, x -> a_i x^r on C_i.
struct CycMap {
  std::uint32_t ell = 1;
  std::uint32_t r = 1;  // canonical residue, 0 <= r < q-1
  std::vector<Elem> a;  // ell nonzero coefficients
};

void validate_cyc_map(const FieldCtx& f, const CycMap& m);

std::vector<Elem> cyc_eval(const FieldCtx& f, const CycMap& m);

/// Wang's criterion: gcd(r, (q-1)/ell) = 1 and the products a_i xi^{ir}
/// represent ell pairwise-distinct cosets of C_0. Agrees with direct
/// permutation testing of cyc_eval.
bool wang_is_permutation(const FieldCtx& f, const CycMap& m);

/// The paper's literal "in particular" sufficient condition: gcd(r,(q-1)/ell)=1
/// and all a_i in one coset. Not actually sufficient (see q=7, ell=2, r=2,
/// a=(1,1)); exposed so the harness can log the discrepancy.
bool wang_same_coset_condition(const FieldCtx& f, const CycMap& m);

struct IndexResult {
  std::uint32_t ell;
  CycMap witness;
};

/// Whether the table admits an r-th order cyclotomic form at this exact ell;
/// returns the witness if so. Requires table[0] = 0 and no zeros on F_q^*.
std::optional<CycMap> try_cyclotomic_form(const FieldCtx& f, std::span<const Elem> table,
                                          std::uint32_t ell);

/// Smallest divisor ell of q-1 admitting a cyclotomic representation, plus a
/// concrete witness. Requires f(0) = 0 and f nonzero on F_q^*.
IndexResult compute_index(const FieldCtx& f, std::span<const Elem> table);

bool verify_index_witness(const FieldCtx& f, std::span<const Elem> table, const CycMap& m);

std::vector<std::uint32_t> divisors(std::uint32_t n);

}  // namespace ppf
