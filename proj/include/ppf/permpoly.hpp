#pragma once

#include <span>
#include <vector>

#include "ppf/field.hpp"

namespace ppf {

/// Polynomial over F_q, stored reduced mod x^q - x (ascending coefficients,
/// no trailing zero) together with its full value table.
struct PermPoly {
  std::vector<Elem> coeffs;
  std::vector<Elem> table;

  static PermPoly from_coeffs(const FieldCtx& f, std::vector<Elem> coeffs);
  static PermPoly from_table(const FieldCtx& f, std::vector<Elem> table);

  /// Degree of the reduced polynomial; -1 for the zero polynomial.
  int degree() const { return (int)coeffs.size() - 1; }
  /// Number of nonzero coefficients.
  int weight() const;
};

/// Horner evaluation; c^0 = 1 for all c including 0.
Elem eval_poly(const FieldCtx& f, std::span<const Elem> coeffs, Elem c);

/// The unique polynomial of degree <= q-1 matching the table (Lagrange).
std::vector<Elem> interpolate(const FieldCtx& f, std::span<const Elem> table);

/// True iff the table is a bijection of F_q.
bool is_permutation_table(std::span<const Elem> table);

bool is_permutation(const PermPoly& f);

/// f - f(0); no-op when f(0) = 0.
PermPoly normalize_origin(const FieldCtx& f, const PermPoly& poly);

std::vector<Elem> normalize_origin_table(const FieldCtx& f, std::span<const Elem> table);

/// Reduces a raw coefficient list mod x^q - x: exponents e >= q fold to
/// 1 + (e-1) mod (q-1).
std::vector<Elem> reduce_coeffs(const FieldCtx& f, std::span<const Elem> raw);

}  // namespace ppf
