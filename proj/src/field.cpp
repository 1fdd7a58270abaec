#include "ppf/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ppf {
namespace {

constexpr std::uint32_t kMaxQ = 1u << 20;
constexpr std::uint32_t kAutoModulusMaxQ = 1u << 16;
constexpr std::uint32_t kAutoModulusMaxK = 4;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    std::uint32_t c = a.back();  // m monic
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t t = (std::uint64_t)c * m[i] % p;
      a[shift + i] = (a[shift + i] + p - (std::uint32_t)t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (std::uint32_t)((c[i + j] + (std::uint64_t)a[i] * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  std::uint32_t k = (std::uint32_t)m.size() - 1;
  // Trial division by all monic polynomials of degree 1..k/2.
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = (std::uint32_t)(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = (std::uint32_t)(c % p);
      c /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  fail(errc::reducible_modulus, "no irreducible found");  // unreachable
}

Poly decode(Elem a, std::uint32_t p, std::uint32_t k) {
  Poly v(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    v[i] = a % p;
    a /= p;
  }
  trim(v);
  return v;
}

Elem encode(const Poly& v, std::uint32_t p) {
  Elem a = 0;
  for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
  return a;
}

}  // namespace

Elem FieldCtx::add_ext(Elem a, Elem b) const {
  Elem out = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

Elem FieldCtx::neg_ext(Elem a) const {
  Elem out = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

Elem FieldCtx::mul_direct(Elem a, Elem b) const {
  if (k_ == 1) return (Elem)((std::uint64_t)a * b % p_);
  return encode(poly_mul_mod(decode(a, p_, k_), decode(b, p_, k_), modulus_, p_), p_);
}

std::uint32_t FieldCtx::order(Elem a) const {
  if (a == 0) fail(errc::zero_log, "order of zero");
  std::uint32_t l = log_[a];
  return (q_ - 1) / std::gcd(q_ - 1, l);
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) fail(errc::non_prime_p, "p is not prime: " + std::to_string(p));
  if (k < 1) fail(errc::invalid_argument, "k must be >= 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q64 *= p;
    if (q64 > kMaxQ) fail(errc::field_too_large, "q exceeds 2^20");
  }
  std::uint32_t q = (std::uint32_t)q64;

  FieldCtx f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;

  if (k == 1) {
    if (!modulus.empty()) fail(errc::invalid_argument, "modulus given for prime field");
  } else {
    if (modulus.empty()) {
      if (q > kAutoModulusMaxQ || k > kAutoModulusMaxK)
        fail(errc::modulus_required, "supply an irreducible modulus for this field");
      modulus = smallest_irreducible(p, k);
    } else {
      for (auto& c : modulus) c %= p;
      if (modulus.size() != k + 1 || modulus.back() != 1)
        fail(errc::invalid_argument, "modulus must be monic of degree k");
      if (!is_irreducible(modulus, p))
        fail(errc::reducible_modulus, "modulus factors over F_p");
    }
    f.modulus_ = modulus;
  }

  // Primitive element: smallest code with multiplicative order q-1.
  auto factors = prime_factors(q - 1);
  auto raw_pow = [&](Elem a, std::uint32_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = f.mul_direct(r, a);
      a = f.mul_direct(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem xi = 0;
  for (Elem c = 1; c < q; ++c) {
    bool primitive = true;
    for (auto d : factors)
      if (raw_pow(c, (q - 1) / d) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      xi = c;
      break;
    }
  }
  f.xi_ = xi;

  f.exp_.assign(q - 1, 0);
  f.log_.assign(q, 0);
  f.inv_.assign(q, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    f.exp_[i] = cur;
    f.log_[cur] = i;
    cur = f.mul_direct(cur, xi);
  }
  for (std::uint32_t i = 0; i < q - 1; ++i)
    f.inv_[f.exp_[i]] = f.exp_[(q - 1 - i) % (q - 1)];
  return f;
}

FieldCtx FieldCtx::from_order(std::uint32_t q) {
  if (q < 2) fail(errc::invalid_argument, "q must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t k = 0, n = q;
  while (n > 1) {
    if (n % p != 0) fail(errc::invalid_argument, "q is not a prime power");
    n /= p;
    ++k;
  }
  return make(p, k);
}

std::string FieldCtx::spec() const {
  std::ostringstream os;
  if (k_ == 1) {
    os << "q=" << q_;
  } else {
    os << "p=" << p_ << ",k=" << k_ << ",mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) os << ',';
      os << modulus_[i];
    }
  }
  return os.str();
}

}  // namespace ppf
