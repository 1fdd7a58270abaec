#include "ppf/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "ppf/permpoly.hpp"

namespace ppf {

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> ds;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

CosetStructure CosetStructure::make(const FieldCtx& f, std::uint32_t ell) {
  if (ell == 0 || (f.q() - 1) % ell != 0)
    fail(errc::invalid_argument, "ell must divide q-1");
  CosetStructure cs;
  cs.ell = ell;
  cs.coset_of.assign(f.q(), 0);
  for (Elem x = 1; x < f.q(); ++x) cs.coset_of[x] = f.dlog(x) % ell;
  return cs;
}

void validate_cyc_map(const FieldCtx& f, const CycMap& m) {
  if (m.ell == 0 || (f.q() - 1) % m.ell != 0)
    fail(errc::invalid_argument, "ell must divide q-1");
  if (m.a.size() != m.ell) fail(errc::invalid_argument, "need ell coefficients");
  if (m.r >= f.q() - 1) fail(errc::invalid_argument, "r must be reduced mod q-1");
  for (auto ai : m.a)
    if (ai == 0 || ai >= f.q()) fail(errc::invalid_argument, "coefficients must be in F_q^*");
}

std::vector<Elem> cyc_eval(const FieldCtx& f, const CycMap& m) {
  validate_cyc_map(f, m);
  std::vector<Elem> table(f.q(), 0);
  for (Elem x = 1; x < f.q(); ++x) {
    std::uint32_t i = f.dlog(x) % m.ell;
    table[x] = f.mul(m.a[i], f.pow(x, m.r));
  }
  return table;
}

bool wang_is_permutation(const FieldCtx& f, const CycMap& m) {
  validate_cyc_map(f, m);
  std::uint32_t sub = (f.q() - 1) / m.ell;
  if (std::gcd(m.r, sub) != 1) return false;
  // i -> coset(a_i) + i*r mod ell must be a bijection on Z_ell.
  std::vector<bool> hit(m.ell, false);
  for (std::uint32_t i = 0; i < m.ell; ++i) {
    std::uint32_t c = (f.dlog(m.a[i]) + (std::uint64_t)i * m.r) % m.ell;
    if (hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

bool wang_same_coset_condition(const FieldCtx& f, const CycMap& m) {
  validate_cyc_map(f, m);
  std::uint32_t sub = (f.q() - 1) / m.ell;
  if (std::gcd(m.r, sub) != 1) return false;
  std::uint32_t c0 = f.dlog(m.a[0]) % m.ell;
  for (auto ai : m.a)
    if (f.dlog(ai) % m.ell != c0) return false;
  return true;
}

std::optional<CycMap> try_cyclotomic_form(const FieldCtx& f, std::span<const Elem> table,
                                          std::uint32_t ell) {
  std::uint32_t q = f.q();
  std::uint32_t sub = (q - 1) / ell;  // |C_0|
  // On C_0, f(g^j) = f(1) g^{jt} for a single t forced by j = 1.
  Elem g = f.exp(ell);
  Elem ratio = f.div(table[g], table[1]);
  std::uint32_t lg = f.dlog(ratio);
  if (lg % ell != 0) return std::nullopt;
  std::uint32_t t = (lg / ell) % sub;
  // Verify f(xi^i g^j) = f(xi^i) g^{jt} everywhere.
  for (std::uint32_t i = 0; i < ell; ++i) {
    Elem base = table[f.exp(i)];
    for (std::uint32_t j = 0; j < sub; ++j) {
      Elem x = f.exp(i + (std::uint64_t)j * ell);
      if (table[x] != f.mul(base, f.exp((std::uint64_t)j * ell * t))) return std::nullopt;
    }
  }
  CycMap m;
  m.ell = ell;
  m.r = t;
  m.a.resize(ell);
  for (std::uint32_t i = 0; i < ell; ++i) {
    std::uint64_t e = (std::uint64_t)i * t % (q - 1);
    m.a[i] = f.mul(table[f.exp(i)], f.exp(q - 1 - e));
  }
  return m;
}

IndexResult compute_index(const FieldCtx& f, std::span<const Elem> table) {
  if (table.size() != f.q()) fail(errc::bad_table_length, "table must have q entries");
  if (table[0] != 0) fail(errc::nonzero_origin, "index requires f(0) = 0");
  for (Elem x = 1; x < f.q(); ++x)
    if (table[x] == 0)
      fail(errc::no_cyclotomic_form, "f vanishes on F_q^*; no cyclotomic form exists");
  for (auto ell : divisors(f.q() - 1)) {
    if (auto m = try_cyclotomic_form(f, table, ell)) return IndexResult{ell, std::move(*m)};
  }
  // ell = q-1 always succeeds for zero-free tables.
  fail(errc::no_cyclotomic_form, "unreachable: full index always admits a form");
}

bool verify_index_witness(const FieldCtx& f, std::span<const Elem> table, const CycMap& m) {
  auto t = cyc_eval(f, m);
  return std::equal(t.begin(), t.end(), table.begin(), table.end());
}

}  // namespace ppf
