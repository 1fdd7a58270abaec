// Command-line front end; all computation goes through the C API.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppf.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 0x9e3779b9;

struct FieldHandle {
  ppf_field* f = nullptr;
  ~FieldHandle() { ppf_field_destroy(f); }
};
struct PolyHandle {
  ppf_poly* p = nullptr;
  ~PolyHandle() { ppf_poly_destroy(p); }
};

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

void check(int rc) {
  if (rc != PPF_OK) die_usage(ppf_last_error());
}

std::string field_spec(std::uint32_t q, const std::string& field) {
  if (!field.empty()) return field;
  if (q == 0) die_usage("need --q or --field");
  return "q=" + std::to_string(q);
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back((std::uint32_t)std::stoul(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

// Prints the JSON and maps its "pass" flag (when present) to the exit code.
int emit(char* json) {
  std::string s = json;
  ppf_string_free(json);
  std::cout << s << "\n";
  auto j = nlohmann::json::parse(s);
  if (j.contains("pass") && !j["pass"].get<bool>()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexity measures of permutation polynomials over finite fields"};
  app.require_subcommand(1);

  std::uint32_t q = 0, p = 0, xi = 0, ell = 1, r = 1, power = 1;
  std::uint32_t alpha = 1, beta = 0, gamma = 0, delta = 1;
  std::uint32_t limit = 11;
  std::uint64_t samples = 0, seed = kDefaultSeed;
  std::string field, poly_text, a_text, out_path, theorem;
  bool exact = false, lower = false, csv = false;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "field order (prime power)");
    cmd->add_option("--field", field, "field spec, e.g. p=3,k=2,mod=1,0,1");
  };

  auto* analyze = app.add_subcommand("analyze", "full measure report for one polynomial");
  add_field(analyze);
  analyze->add_option("--poly", poly_text)->required();
  analyze->add_option("--limit", limit, "exact-rank oracle limit");

  auto* index = app.add_subcommand("index", "least cyclotomic index with witness");
  add_field(index);
  index->add_option("--poly", poly_text)->required();

  auto* crk = app.add_subcommand("crk", "Carlitz rank (exact oracle or lower bound)");
  add_field(crk);
  crk->add_option("--poly", poly_text)->required();
  crk->add_flag("--exact", exact);
  crk->add_flag("--lower-bound", lower);
  crk->add_option("--limit", limit);

  auto* dlog = app.add_subcommand("dlog", "discrete-log permutation report");
  dlog->add_option("--p", p)->required();
  dlog->add_option("--xi", xi, "override the primitive element");
  dlog->add_option("--limit", limit);

  auto* wang = app.add_subcommand("wang", "Wang criterion for a cyclotomic map");
  add_field(wang);
  wang->add_option("--ell", ell)->required();
  wang->add_option("--r", r)->required();
  wang->add_option("--a", a_text, "coefficients, e.g. 1,3")->required();

  auto* scan = app.add_subcommand("scan", "per-permutation CSV of all measures");
  add_field(scan);
  scan->add_option("--out", out_path)->required();
  scan->add_flag("--csv", csv, "CSV output (the only format)");
  scan->add_option("--sample", samples, "sample size; 0 = exhaustive (q <= 8)");
  scan->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "machine-check a theorem or inequality");
  add_field(verify);
  verify->add_option("--theorem", theorem, "1|2|3|ineq2|ineq3|rate")->required();
  verify->add_option("--poly", poly_text);
  verify->add_option("--ell", ell);
  verify->add_option("--r", r);
  verify->add_option("--a", a_text);
  verify->add_option("--p", p);
  verify->add_option("--xi", xi);
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--limit", limit);

  auto* charsum = app.add_subcommand("charsum", "multiplicative character sum with Weil check");
  add_field(charsum);
  charsum->add_option("--ell", ell)->required();
  charsum->add_option("--power", power);
  charsum->add_option("--alpha", alpha);
  charsum->add_option("--beta", beta);
  charsum->add_option("--gamma", gamma);
  charsum->add_option("--delta", delta);
  charsum->add_option("--r", r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto open_field = [&](FieldHandle& fh) { check(ppf_field_create(field_spec(q, field).c_str(), &fh.f)); };
  auto open_poly = [&](const FieldHandle& fh, PolyHandle& ph) {
    if (poly_text.empty()) die_usage("need --poly");
    check(ppf_poly_parse(fh.f, poly_text.c_str(), &ph.p));
  };
  char* json = nullptr;

  if (analyze->parsed()) {
    FieldHandle fh;
    PolyHandle ph;
    open_field(fh);
    open_poly(fh, ph);
    check(ppf_analyze_json(fh.f, ph.p, limit, &json));
    return emit(json);
  }
  if (index->parsed()) {
    FieldHandle fh;
    PolyHandle ph;
    open_field(fh);
    open_poly(fh, ph);
    check(ppf_index_json(fh.f, ph.p, &json));
    return emit(json);
  }
  if (crk->parsed()) {
    if (exact && lower) die_usage("--exact and --lower-bound are mutually exclusive");
    FieldHandle fh;
    PolyHandle ph;
    open_field(fh);
    open_poly(fh, ph);
    check(ppf_crk_json(fh.f, ph.p, lower ? 0 : 1, limit, &json));
    return emit(json);
  }
  if (dlog->parsed()) {
    check(ppf_dlog_report_json(p, xi, limit, &json));
    return emit(json);
  }
  if (wang->parsed()) {
    FieldHandle fh;
    open_field(fh);
    auto a = parse_list(a_text);
    check(ppf_wang_json(fh.f, ell, r, a.data(), (std::uint32_t)a.size(), &json));
    return emit(json);
  }
  if (scan->parsed()) {
    FieldHandle fh;
    open_field(fh);
    check(ppf_scan_csv(fh.f, out_path.c_str(), samples, seed));
    return 0;
  }
  if (verify->parsed()) {
    if (theorem == "3") {
      if (p == 0) die_usage("verify --theorem 3 needs --p");
      check(ppf_dlog_report_json(p, xi, limit, &json));
      return emit(json);
    }
    FieldHandle fh;
    open_field(fh);
    PolyHandle ph;
    if (!poly_text.empty()) check(ppf_poly_parse(fh.f, poly_text.c_str(), &ph.p));
    auto a = parse_list(a_text);
    check(ppf_verify_json(fh.f, theorem.c_str(), ph.p, ell, r, a.data(),
                          (std::uint32_t)a.size(), samples ? samples : 10000, seed, limit,
                          &json));
    return emit(json);
  }
  if (charsum->parsed()) {
    FieldHandle fh;
    open_field(fh);
    check(ppf_charsum_json(fh.f, ell, power, alpha, beta, gamma, delta, r, &json));
    return emit(json);
  }
  die_usage("no subcommand");
}
