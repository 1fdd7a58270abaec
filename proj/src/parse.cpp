#include "ppf/parse.hpp"

#include <cctype>
#include <sstream>

namespace ppf {
namespace {

[[noreturn]] void parse_fail(const std::string& msg, std::size_t pos) {
  fail(errc::parse_error, msg + " at offset " + std::to_string(pos));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty number");
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad number: " + s);
  }
  if (pos != s.size()) fail(errc::parse_error, "bad number: " + s);
  return v;
}

Elem reduce_coef(const FieldCtx& f, std::uint64_t raw, bool negative) {
  Elem c;
  if (f.k() == 1) {
    c = (Elem)(raw % f.p());
  } else {
    if (raw >= f.q())
      fail(errc::coefficient_out_of_range,
           "element code " + std::to_string(raw) + " out of range for q=" + std::to_string(f.q()));
    c = (Elem)raw;
  }
  return negative ? f.neg(c) : c;
}

}  // namespace

FieldCtx parse_field_spec(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.empty()) fail(errc::parse_error, "empty field spec");
  if (parts[0].rfind("q=", 0) == 0) {
    if (parts.size() != 1) fail(errc::parse_error, "unexpected tokens after q=");
    return FieldCtx::from_order((std::uint32_t)parse_uint(parts[0].substr(2)));
  }
  std::uint32_t p = 0, k = 0;
  std::vector<std::uint32_t> mod;
  bool in_mod = false;
  for (const auto& tok : parts) {
    if (tok.rfind("p=", 0) == 0) {
      p = (std::uint32_t)parse_uint(tok.substr(2));
    } else if (tok.rfind("k=", 0) == 0) {
      k = (std::uint32_t)parse_uint(tok.substr(2));
    } else if (tok.rfind("mod=", 0) == 0) {
      in_mod = true;
      mod.push_back((std::uint32_t)parse_uint(tok.substr(4)));
    } else if (in_mod) {
      mod.push_back((std::uint32_t)parse_uint(tok));
    } else {
      fail(errc::parse_error, "unknown field spec token: " + tok);
    }
  }
  if (p == 0 || k == 0) fail(errc::parse_error, "field spec needs p= and k=");
  return FieldCtx::make(p, k, std::move(mod));
}

PermPoly parse_poly(const FieldCtx& f, const std::string& text) {
  if (text.empty()) fail(errc::parse_error, "empty polynomial");

  if (text.find('x') == std::string::npos) {
    // Coefficient list, ascending.
    std::vector<Elem> coeffs;
    for (const auto& tok : split(text, ',')) {
      std::string t = tok;
      std::erase(t, ' ');
      bool neg = !t.empty() && t[0] == '-';
      if (neg) t = t.substr(1);
      coeffs.push_back(reduce_coef(f, parse_uint(t), neg));
    }
    return PermPoly::from_coeffs(f, std::move(coeffs));
  }

  // expr := ['-'] term (('+'|'-') term)*; term := [coef]['x'['^'exp]]
  std::vector<Elem> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto read_digits = [&]() -> std::uint64_t {
    std::size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start) parse_fail("expected digits", i);
    return parse_uint(text.substr(start, i - start));
  };
  bool negative = false;
  skip_ws();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) parse_fail("expected term", i);
    std::uint64_t coef = 1;
    bool have_coef = false;
    if (std::isdigit((unsigned char)text[i])) {
      coef = read_digits();
      have_coef = true;
    }
    std::uint64_t exp = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          parse_fail("expected exponent", i);
        exp = read_digits();
      }
    } else if (!have_coef) {
      parse_fail("expected term", i);
    }
    Elem c = reduce_coef(f, coef, negative);
    std::size_t e = exp < f.q() ? (std::size_t)exp : 1 + (std::size_t)((exp - 1) % (f.q() - 1));
    if (raw.size() <= e) raw.resize(e + 1, 0);
    raw[e] = f.add(raw[e], c);

    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+') {
      negative = false;
    } else if (text[i] == '-') {
      negative = true;
    } else {
      parse_fail("expected '+' or '-'", i);
    }
    ++i;
  }
  return PermPoly::from_coeffs(f, std::move(raw));
}

std::string render_coeffs(const PermPoly& poly) {
  std::ostringstream os;
  if (poly.coeffs.empty()) return "0";
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    if (i) os << ',';
    os << poly.coeffs[i];
  }
  return os.str();
}

}  // namespace ppf
