#include "ppf/carlitz.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "ppf/permpoly.hpp"

namespace ppf {
namespace {

constexpr std::uint32_t kOracleHardCap = 12;

// (ax+b)/(cx+d) as the matrix [a b; c d].
using Mat = std::array<Elem, 4>;

Elem det(const FieldCtx& f, const Mat& m) {
  return f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
}

Mat matmul(const FieldCtx& f, const Mat& x, const Mat& y) {
  return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
          f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
          f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

const std::uint64_t kFact[] = {1ull,       1ull,        2ull,         6ull,
                               24ull,      120ull,      720ull,       5040ull,
                               40320ull,   362880ull,   3628800ull,   39916800ull,
                               479001600ull, 6227020800ull};

}  // namespace

MoebiusMap MoebiusMap::canonical(const FieldCtx& f, Elem a, Elem b, Elem c, Elem d) {
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
    fail(errc::singular_moebius, "alpha*delta = beta*gamma");
  Elem lead = a ? a : (b ? b : c);
  Elem s = f.inv(lead);
  return MoebiusMap{f.mul(s, a), f.mul(s, b), f.mul(s, c), f.mul(s, d)};
}

std::optional<Elem> MoebiusMap::eval(const FieldCtx& f, Elem x) const {
  Elem den = f.add(f.mul(c, x), d);
  if (den == 0) return std::nullopt;
  return f.div(f.add(f.mul(a, x), b), den);
}

std::vector<Elem> chain_eval(const FieldCtx& f, const CarlitzChain& ch) {
  int n = ch.inversions();
  if (n < 0 || ch.c[0] == 0) fail(errc::invalid_chain, "need c0 != 0 and >= 2 coefficients");
  for (int i = 2; i <= n; ++i)
    if (ch.c[i] == 0) fail(errc::invalid_chain, "c_i = 0 for 2 <= i <= n");
  std::vector<Elem> table(f.q());
  for (Elem x = 0; x < f.q(); ++x) {
    Elem v = f.add(f.mul(ch.c[0], x), ch.c[1]);
    for (int k = 1; k <= n; ++k) v = f.add(f.inv0(v), ch.c[k + 1]);
    table[x] = v;
  }
  return table;
}

ChainMoebius chain_to_moebius(const FieldCtx& f, const CarlitzChain& ch) {
  int n = ch.inversions();
  if (n < 0 || ch.c[0] == 0) fail(errc::invalid_chain, "need c0 != 0 and >= 2 coefficients");
  Mat m{ch.c[0], ch.c[1], 0, 1};
  std::vector<Elem> poles;
  for (int k = 1; k <= n; ++k) {
    // The inversion receives (m0 x + m1)/(m2 x + m3); zero at x = -m1/m0.
    if (m[0] != 0) {
      Elem pole = f.neg(f.div(m[1], m[0]));
      if (std::find(poles.begin(), poles.end(), pole) == poles.end()) poles.push_back(pole);
    }
    m = {m[2], m[3], m[0], m[1]};                       // invert
    m = matmul(f, Mat{1, ch.c[k + 1], 0, 1}, m);        // add c_{k+1}
  }
  if (det(f, m) == 0) fail(errc::degenerate_chain, "chain collapses to a constant map");
  std::sort(poles.begin(), poles.end());
  return ChainMoebius{MoebiusMap::canonical(f, m[0], m[1], m[2], m[3]), std::move(poles)};
}

int agreement_count(const FieldCtx& f, std::span<const Elem> table, const MoebiusMap& m) {
  int n = 0;
  for (Elem x = 0; x < f.q(); ++x) {
    auto v = m.eval(f, x);
    if (v && *v == table[x]) ++n;
  }
  return n;
}

namespace {

// Matrix sending (x1, x2, x3) to (0, 1, inf).
Mat to_std_triple(const FieldCtx& f, Elem x1, Elem x2, Elem x3) {
  Elem u = f.sub(x2, x3), v = f.sub(x2, x1);
  return {u, f.neg(f.mul(x1, u)), v, f.neg(f.mul(x3, v))};
}

}  // namespace

AgreementMax max_agreement(const FieldCtx& f, std::span<const Elem> table) {
  if (!is_permutation_table(table)) fail(errc::not_permutation, "table is not a bijection");
  std::uint32_t q = f.q();
  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  counts.reserve(q * q);
  // The unique Moebius map through {(ci, f(ci))} for every input triple; a
  // class with agreement A is hit C(A,3) times.
  for (Elem x1 = 0; x1 < q; ++x1)
    for (Elem x2 = x1 + 1; x2 < q; ++x2)
      for (Elem x3 = x2 + 1; x3 < q; ++x3) {
        Mat A = to_std_triple(f, x1, x2, x3);
        Mat B = to_std_triple(f, table[x1], table[x2], table[x3]);
        Mat adjB{B[3], f.neg(B[1]), f.neg(B[2]), B[0]};
        Mat M = matmul(f, adjB, A);
        auto cm = MoebiusMap::canonical(f, M[0], M[1], M[2], M[3]);
        ++counts[cm.key(q)];
      }
  std::uint32_t best = 0;
  std::uint64_t best_key = ~0ull;
  for (auto& [key, cnt] : counts)
    if (cnt > best || (cnt == best && key < best_key)) {
      best = cnt;
      best_key = key;
    }
  AgreementMax out;
  if (best == 0) {  // q < 3 never happens in practice; fall back to identity
    out.argmax = MoebiusMap{};
    out.nmax = agreement_count(f, table, out.argmax);
    return out;
  }
  out.argmax = MoebiusMap{(Elem)(best_key / q / q / q % q), (Elem)(best_key / q / q % q),
                          (Elem)(best_key / q % q), (Elem)(best_key % q)};
  out.nmax = agreement_count(f, table, out.argmax);
  return out;
}

void for_each_moebius(const FieldCtx& f, const std::function<void(const MoebiusMap&)>& fn) {
  std::uint32_t q = f.q();
  for (Elem b = 0; b < q; ++b)
    for (Elem c = 0; c < q; ++c)
      for (Elem d = 0; d < q; ++d)
        if (f.sub(d, f.mul(b, c)) != 0) fn(MoebiusMap{1, b, c, d});
  for (Elem c = 1; c < q; ++c)
    for (Elem d = 0; d < q; ++d) fn(MoebiusMap{0, 1, c, d});
}

AgreementMax max_agreement_bruteforce(const FieldCtx& f, std::span<const Elem> table,
                                      const std::function<bool(const MoebiusMap&)>& filter) {
  AgreementMax out;
  out.nmax = -1;
  std::uint64_t best_key = ~0ull;
  for_each_moebius(f, [&](const MoebiusMap& m) {
    if (filter && !filter(m)) return;
    int n = agreement_count(f, table, m);
    std::uint64_t key = m.key(f.q());
    if (n > out.nmax || (n == out.nmax && key < best_key)) {
      out.nmax = n;
      out.argmax = m;
      best_key = key;
    }
  });
  return out;
}

int linearity(const FieldCtx& f, std::span<const Elem> table) {
  if (table[0] != 0) fail(errc::nonzero_origin, "linearity requires f(0) = 0");
  std::vector<int> hist(f.q(), 0);
  int best = 0;
  for (Elem x = 1; x < f.q(); ++x) {
    if (table[x] == 0) continue;
    int h = ++hist[f.div(table[x], x)];
    best = std::max(best, h);
  }
  return best + 1;  // c = 0 satisfies f(0) = a*0 for every a
}

int invertibility(const FieldCtx& f, std::span<const Elem> table) {
  std::vector<int> hist(f.q(), 0);
  int best = 0;
  for (Elem x = 1; x < f.q(); ++x) {
    if (table[x] == 0) continue;
    int h = ++hist[f.mul(x, table[x])];
    best = std::max(best, h);
  }
  return best;
}

int crk_lower_bound(const FieldCtx& f, std::span<const Elem> table) {
  return std::max(0, (int)f.q() - max_agreement(f, table).nmax);
}

std::uint64_t perm_rank(std::span<const Elem> table) {
  std::size_t n = table.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = table[i];
    std::uint32_t smaller = v - std::popcount(used & ((1u << v) - 1));
    rank += smaller * kFact[n - 1 - i];
    used |= 1u << v;
  }
  return rank;
}

CarlitzOracle::CarlitzOracle(const FieldCtx& f, std::uint32_t limit_q) : f_(f), q_(f.q()) {
  if (q_ > limit_q || q_ > kOracleHardCap)
    fail(errc::oracle_too_large,
         "exact rank oracle limited to q <= " + std::to_string(std::min(limit_q, kOracleHardCap)));
  depth_.assign(kFact[q_], -1);
  std::vector<Elem> id(q_);
  for (Elem x = 0; x < q_; ++x) id[x] = x;
  depth_[0] = 0;  // canonical(identity) = identity, rank 0
  frontier_.push_back(std::move(id));
  nstates_ = 1;
}

std::vector<Elem> CarlitzOracle::canonical(std::span<const Elem> table) const {
  // Lexicographically smallest of {a*(t - t[0]) : a != 0}; exactly the left
  // AGL(1,q) coset members whose table starts with 0.
  const auto& log = f_.log_table();
  const auto& exp = f_.exp_table();
  std::vector<Elem> g(q_), best(q_);
  for (std::uint32_t x = 0; x < q_; ++x) g[x] = f_.sub(table[x], table[0]);
  best = g;
  for (Elem a = 2; a < q_; ++a) {
    std::uint32_t la = log[a];
    for (std::uint32_t x = 1; x < q_; ++x) {
      Elem gv = g[x];
      Elem v = gv == 0 ? 0 : exp[(la + log[gv]) % (q_ - 1)];
      if (v < best[x]) {
        for (std::uint32_t y = 1; y < q_; ++y) {
          Elem gy = g[y];
          best[y] = gy == 0 ? 0 : exp[(la + log[gy]) % (q_ - 1)];
        }
        break;
      }
      if (v > best[x]) break;
    }
  }
  return best;
}

bool CarlitzOracle::expand_layer() {
  if (done_) return false;
  // Precompute the q(q-1) composite rows v -> (a v + b)^{q-2}.
  std::vector<std::vector<Elem>> rows;
  rows.reserve((std::size_t)q_ * (q_ - 1));
  for (Elem a = 1; a < q_; ++a)
    for (Elem b = 0; b < q_; ++b) {
      std::vector<Elem> row(q_);
      for (Elem v = 0; v < q_; ++v) row[v] = f_.inv0(f_.add(f_.mul(a, v), b));
      rows.push_back(std::move(row));
    }
  std::vector<std::vector<Elem>> next;
  std::vector<Elem> h(q_);
  for (const auto& g : frontier_) {
    for (const auto& row : rows) {
      for (std::uint32_t x = 0; x < q_; ++x) h[x] = row[g[x]];
      auto c = canonical(h);
      std::uint64_t r = perm_rank(c);
      if (depth_[r] < 0) {
        depth_[r] = (std::int8_t)(cur_depth_ + 1);
        next.push_back(std::move(c));
        ++nstates_;
      }
    }
  }
  frontier_ = std::move(next);
  ++cur_depth_;
  if (frontier_.empty()) {
    done_ = true;
    --cur_depth_;  // last depth that actually had states
    return false;
  }
  return true;
}

int CarlitzOracle::rank_of(std::span<const Elem> table) {
  if (!is_permutation_table(table)) fail(errc::not_permutation, "table is not a bijection");
  std::uint64_t r = perm_rank(canonical(table));
  while (depth_[r] < 0 && expand_layer()) {
  }
  if (depth_[r] < 0) fail(errc::invalid_argument, "closure exhausted without reaching target");
  return depth_[r];
}

int CarlitzOracle::max_rank() {
  while (expand_layer()) {
  }
  return cur_depth_;
}

int crk_exact(const FieldCtx& f, std::span<const Elem> table, std::uint32_t limit_q) {
  CarlitzOracle oracle(f, limit_q);
  return oracle.rank_of(table);
}

std::optional<CarlitzChain> chain_witness_upto1(const FieldCtx& f, std::span<const Elem> table) {
  std::uint32_t q = f.q();
  for (Elem c0 = 1; c0 < q; ++c0) {
    Elem c1 = table[0];  // affine: c0*0 + c1 = f(0)
    bool ok = true;
    for (Elem x = 0; x < q && ok; ++x) ok = table[x] == f.add(f.mul(c0, x), c1);
    if (ok) return CarlitzChain{{c0, c1}};
  }
  for (Elem c0 = 1; c0 < q; ++c0)
    for (Elem c1 = 0; c1 < q; ++c1)
      for (Elem c2 = 0; c2 < q; ++c2) {
        bool ok = true;
        for (Elem x = 0; x < q && ok; ++x)
          ok = table[x] == f.add(f.inv0(f.add(f.mul(c0, x), c1)), c2);
        if (ok) return CarlitzChain{{c0, c1, c2}};
      }
  return std::nullopt;
}

}  // namespace ppf
