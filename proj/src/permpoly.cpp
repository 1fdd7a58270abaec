#include "ppf/permpoly.hpp"

#include <algorithm>

namespace ppf {

Elem eval_poly(const FieldCtx& f, std::span<const Elem> coeffs, Elem c) {
  Elem acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, c), coeffs[i]);
  return acc;
}

std::vector<Elem> reduce_coeffs(const FieldCtx& f, std::span<const Elem> raw) {
  std::uint32_t q = f.q();
  std::vector<Elem> out(std::min<std::size_t>(raw.size(), q), 0);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    std::size_t r = e < q ? e : 1 + (e - 1) % (q - 1);
    out[r] = f.add(out[r], raw[e]);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<Elem> interpolate(const FieldCtx& f, std::span<const Elem> table) {
  std::uint32_t q = f.q();
  if (table.size() != q) fail(errc::bad_table_length, "table must have q entries");
  // M(x) = prod_c (x - c) = x^q - x, so M'(x) = -1 everywhere; the Lagrange
  // basis at x_j is -M(x)/(x - x_j).
  std::vector<Elem> acc(q, 0);
  std::vector<Elem> quot(q, 0);
  for (std::uint32_t j = 0; j < q; ++j) {
    if (table[j] == 0) continue;
    Elem a = (Elem)j;
    // Synthetic division of x^q - x by (x - a), descending Horner.
    Elem b = 1;
    quot[q - 1] = b;
    for (std::uint32_t i = q - 1; i >= 1; --i) {
      Elem m_i = (i == 1) ? f.neg(1) : 0;
      b = f.add(f.mul(a, b), m_i);
      quot[i - 1] = b;
    }
    Elem scale = f.neg(table[j]);
    for (std::uint32_t i = 0; i < q; ++i) acc[i] = f.add(acc[i], f.mul(scale, quot[i]));
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

PermPoly PermPoly::from_coeffs(const FieldCtx& f, std::vector<Elem> coeffs) {
  PermPoly poly;
  poly.coeffs = reduce_coeffs(f, coeffs);
  poly.table.resize(f.q());
  for (std::uint32_t c = 0; c < f.q(); ++c) poly.table[c] = eval_poly(f, poly.coeffs, (Elem)c);
  return poly;
}

PermPoly PermPoly::from_table(const FieldCtx& f, std::vector<Elem> table) {
  PermPoly poly;
  poly.coeffs = interpolate(f, table);
  poly.table = std::move(table);
  return poly;
}

int PermPoly::weight() const {
  int w = 0;
  for (auto c : coeffs)
    if (c != 0) ++w;
  return w;
}

bool is_permutation_table(std::span<const Elem> table) {
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_permutation(const PermPoly& f) { return is_permutation_table(f.table); }

std::vector<Elem> normalize_origin_table(const FieldCtx& f, std::span<const Elem> table) {
  std::vector<Elem> out(table.begin(), table.end());
  Elem c0 = table[0];
  if (c0 != 0)
    for (auto& v : out) v = f.sub(v, c0);
  return out;
}

PermPoly normalize_origin(const FieldCtx& f, const PermPoly& poly) {
  if (poly.table.empty() || poly.table[0] == 0) return poly;
  PermPoly out;
  out.table = normalize_origin_table(f, poly.table);
  out.coeffs = poly.coeffs;
  if (out.coeffs.empty()) out.coeffs.push_back(0);
  out.coeffs[0] = f.sub(out.coeffs[0], poly.table[0]);
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

}  // namespace ppf
