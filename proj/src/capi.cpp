#include "ppf.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "ppf/bounds.hpp"
#include "ppf/dlog_perm.hpp"
#include "ppf/parse.hpp"
#include "ppf/report.hpp"

struct ppf_field {
  ppf::FieldCtx ctx;
};
struct ppf_poly {
  ppf::PermPoly poly;
};

namespace {

thread_local std::string g_last_error;

int code_of(ppf::errc c) {
  using ppf::errc;
  switch (c) {
    case errc::ok: return PPF_OK;
    case errc::invalid_argument: return PPF_ERR_INVALID;
    case errc::non_prime_p: return PPF_ERR_NON_PRIME;
    case errc::reducible_modulus: return PPF_ERR_REDUCIBLE_MODULUS;
    case errc::field_too_large: return PPF_ERR_FIELD_TOO_LARGE;
    case errc::modulus_required: return PPF_ERR_MODULUS_REQUIRED;
    case errc::zero_inverse: return PPF_ERR_ZERO_INVERSE;
    case errc::zero_log: return PPF_ERR_ZERO_LOG;
    case errc::bad_table_length: return PPF_ERR_BAD_TABLE_LENGTH;
    case errc::no_cyclotomic_form: return PPF_ERR_NO_CYCLOTOMIC_FORM;
    case errc::nonzero_origin: return PPF_ERR_NONZERO_ORIGIN;
    case errc::invalid_chain: return PPF_ERR_INVALID_CHAIN;
    case errc::degenerate_chain: return PPF_ERR_DEGENERATE_CHAIN;
    case errc::not_permutation: return PPF_ERR_NOT_PERMUTATION;
    case errc::oracle_too_large: return PPF_ERR_ORACLE_TOO_LARGE;
    case errc::scan_too_large: return PPF_ERR_SCAN_TOO_LARGE;
    case errc::coset_mismatch: return PPF_ERR_COSET_MISMATCH;
    case errc::order_not_dividing: return PPF_ERR_ORDER_NOT_DIVIDING;
    case errc::singular_moebius: return PPF_ERR_SINGULAR_MOEBIUS;
    case errc::parse_error: return PPF_ERR_PARSE;
    case errc::coefficient_out_of_range: return PPF_ERR_COEFFICIENT_RANGE;
    case errc::not_prime_field: return PPF_ERR_NOT_PRIME_FIELD;
    case errc::degree_too_small: return PPF_ERR_DEGREE_TOO_SMALL;
  }
  return PPF_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return PPF_OK;
  } catch (const ppf::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PPF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_json(const nlohmann::json& j, char** out) { *out = dup_string(j.dump()); }

ppf::CycMap make_map(uint32_t ell, uint32_t r, const uint32_t* a, uint32_t alen) {
  ppf::CycMap m;
  m.ell = ell;
  m.r = r;
  m.a.assign(a, a + alen);
  return m;
}

nlohmann::json thm3_json(const ppf::Thm3Report& rep) {
  nlohmann::json j;
  j["theorem"] = "3";
  j["p"] = rep.p;
  j["xi"] = rep.xi;
  j["deg"] = rep.deg;
  j["w"] = rep.w;
  if (rep.ind) j["ind"] = *rep.ind;
  j["lin"] = rep.lin;
  j["lin_bound"] = rep.lin_bound;
  j["inv"] = rep.inv;
  j["inv_bound"] = rep.inv_bound;
  j["nmax"] = rep.nmax;
  j["nmax_bound"] = rep.nmax_bound;
  j["crk_lower"] = rep.crk_lower;
  j["crk_bound"] = rep.crk_bound;
  if (rep.crk_exact) j["crk_exact"] = *rep.crk_exact;
  j["checks"] = {{"deg_weight", rep.deg_weight_ok}, {"ind", rep.ind_ok},  {"lin", rep.lin_ok},
                 {"inv", rep.inv_ok},               {"nmax", rep.nmax_ok}, {"crk", rep.crk_ok}};
  j["pass"] = rep.pass;
  return j;
}

}  // namespace

extern "C" {

const char* ppf_last_error(void) { return g_last_error.c_str(); }

void ppf_string_free(char* s) { std::free(s); }

int ppf_field_create(const char* spec, ppf_field** out) {
  return guarded([&] { *out = new ppf_field{ppf::parse_field_spec(spec)}; });
}

void ppf_field_destroy(ppf_field* f) { delete f; }

uint32_t ppf_field_order(const ppf_field* f) { return f->ctx.q(); }

uint32_t ppf_field_primitive(const ppf_field* f) { return f->ctx.xi(); }

int ppf_field_spec(const ppf_field* f, char** out) {
  return guarded([&] { *out = dup_string(f->ctx.spec()); });
}

int ppf_poly_parse(const ppf_field* f, const char* text, ppf_poly** out) {
  return guarded([&] { *out = new ppf_poly{ppf::parse_poly(f->ctx, text)}; });
}

int ppf_poly_from_table(const ppf_field* f, const uint32_t* table, uint32_t len, ppf_poly** out) {
  return guarded([&] {
    std::vector<ppf::Elem> t(table, table + len);
    *out = new ppf_poly{ppf::PermPoly::from_table(f->ctx, std::move(t))};
  });
}

void ppf_poly_destroy(ppf_poly* poly) { delete poly; }

int ppf_poly_eval(const ppf_field* f, const ppf_poly* poly, uint32_t c, uint32_t* out) {
  return guarded([&] {
    if (c >= f->ctx.q()) ppf::fail(ppf::errc::invalid_argument, "element code out of range");
    *out = poly->poly.table[c];
  });
}

int ppf_poly_coeffs_string(const ppf_poly* poly, char** out) {
  return guarded([&] { *out = dup_string(ppf::render_coeffs(poly->poly)); });
}

int ppf_analyze_json(const ppf_field* f, const ppf_poly* poly, uint32_t oracle_limit,
                     char** out_json) {
  return guarded([&] { emit_json(ppf::analyze(f->ctx, poly->poly, oracle_limit), out_json); });
}

int ppf_index_json(const ppf_field* f, const ppf_poly* poly, char** out_json) {
  return guarded([&] {
    auto g = ppf::normalize_origin_table(f->ctx, poly->poly.table);
    auto idx = ppf::compute_index(f->ctx, g);
    nlohmann::json j{{"ell", idx.ell}, {"witness", ppf::witness_json(idx.witness)}};
    emit_json(j, out_json);
  });
}

int ppf_crk_json(const ppf_field* f, const ppf_poly* poly, int exact, uint32_t oracle_limit,
                 char** out_json) {
  return guarded([&] {
    nlohmann::json j;
    if (exact)
      j["crk"] = ppf::crk_exact(f->ctx, poly->poly.table, oracle_limit);
    else
      j["crk"] = ppf::crk_lower_bound(f->ctx, poly->poly.table);
    j["exact"] = exact != 0;
    emit_json(j, out_json);
  });
}

int ppf_dlog_report_json(uint32_t p, uint32_t xi_or_zero, uint32_t oracle_limit, char** out_json) {
  return guarded([&] {
    auto field = ppf::FieldCtx::make(p, 1);
    std::optional<ppf::Elem> xi;
    if (xi_or_zero) xi = xi_or_zero;
    emit_json(thm3_json(ppf::verify_thm3(field, xi, oracle_limit)), out_json);
  });
}

int ppf_wang_json(const ppf_field* f, uint32_t ell, uint32_t r, const uint32_t* a, uint32_t alen,
                  char** out_json) {
  return guarded([&] {
    auto m = make_map(ell, r, a, alen);
    bool wang = ppf::wang_is_permutation(f->ctx, m);
    auto table = ppf::cyc_eval(f->ctx, m);
    bool direct = ppf::is_permutation_table(table);
    nlohmann::json j{{"wang", wang},
                     {"direct", direct},
                     {"same_coset_condition", ppf::wang_same_coset_condition(f->ctx, m)},
                     {"table", table}};
    emit_json(j, out_json);
  });
}

int ppf_scan_csv(const ppf_field* f, const char* path, uint64_t samples, uint64_t seed) {
  return guarded([&] {
    std::ofstream out(path);
    if (!out) ppf::fail(ppf::errc::invalid_argument, std::string("cannot open ") + path);
    if (samples) out << "# field=" << f->ctx.spec() << " samples=" << samples << " seed=" << seed
                     << "\n";
    ppf::scan_all(f->ctx, out, samples, seed);
  });
}

int ppf_charsum_json(const ppf_field* f, uint32_t ell, uint32_t power, uint32_t alpha,
                     uint32_t beta, uint32_t gamma, uint32_t delta, uint32_t r, char** out_json) {
  return guarded([&] {
    auto s = ppf::weil_sum(f->ctx, ppf::CharSpec{ell, power}, alpha, beta, gamma, delta, r);
    nlohmann::json j{{"re", s.value.real()},     {"im", s.value.imag()},
                     {"abs", std::abs(s.value)}, {"nontrivial", s.nontrivial},
                     {"weil_bound", s.bound},    {"pass", s.weil_ok}};
    emit_json(j, out_json);
  });
}

int ppf_verify_json(const ppf_field* f, const char* theorem, const ppf_poly* poly, uint32_t ell,
                    uint32_t r, const uint32_t* a, uint32_t alen, uint64_t samples, uint64_t seed,
                    uint32_t oracle_limit, char** out_json) {
  return guarded([&] {
    std::string which = theorem ? theorem : "";
    ppf::TheoremReport rep;
    if (which == "1") {
      if (!poly) ppf::fail(ppf::errc::invalid_argument, "theorem 1 needs a polynomial");
      rep = ppf::verify_thm1(f->ctx, poly->poly, nullptr, oracle_limit);
    } else if (which == "2") {
      rep = ppf::verify_thm2(f->ctx, make_map(ell, r, a, alen), oracle_limit);
    } else if (which == "rate") {
      rep = ppf::verify_rate_bounds(f->ctx, make_map(ell, r, a, alen), samples, seed);
      rep.data["seed"] = seed;
    } else if (which == "ineq2" || which == "ineq3") {
      if (!poly) ppf::fail(ppf::errc::invalid_argument, "inequality checks need a polynomial");
      rep = ppf::verify_deg_weight_ineqs(f->ctx, poly->poly, nullptr, oracle_limit);
      if (which == "ineq2")
        rep.pass = rep.data["ineq2_pass"].get<bool>();
      else
        rep.pass = rep.data.value("ineq3_pass", true);
    } else {
      ppf::fail(ppf::errc::invalid_argument, "unknown theorem: " + which);
    }
    emit_json(rep.to_json(), out_json);
  });
}

}  // extern "C"
