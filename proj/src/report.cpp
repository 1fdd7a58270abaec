#include "ppf/report.hpp"

namespace ppf {

nlohmann::json moebius_json(const MoebiusMap& m) {
  return nlohmann::json::array({m.a, m.b, m.c, m.d});
}

nlohmann::json witness_json(const CycMap& m) {
  return {{"ell", m.ell}, {"r", m.r}, {"a", m.a}};
}

nlohmann::json analyze(const FieldCtx& f, const PermPoly& poly, std::uint32_t oracle_limit) {
  nlohmann::json j;
  j["field"] = f.spec();
  j["coeffs"] = poly.coeffs;
  j["table"] = poly.table;
  j["deg"] = poly.degree();
  j["w"] = poly.weight();
  bool perm = is_permutation(poly);
  j["is_permutation"] = perm;
  if (!perm) return j;

  auto g = normalize_origin_table(f, poly.table);
  auto idx = compute_index(f, g);
  j["ind"] = idx.ell;
  j["ind_witness"] = witness_json(idx.witness);
  j["lin"] = linearity(f, g);
  j["inv"] = invertibility(f, g);
  auto agr = max_agreement(f, g);
  j["nmax"] = agr.nmax;
  j["moebius"] = moebius_json(agr.argmax);
  j["crk_lower"] = std::max(0, (int)f.q() - agr.nmax);
  if (f.q() <= oracle_limit) {
    int crk = crk_exact(f, g, oracle_limit);
    j["crk_exact"] = crk;
    if (crk <= 1) {
      if (auto ch = chain_witness_upto1(f, g)) j["chain_witness"] = ch->c;
    }
  }
  return j;
}

}  // namespace ppf
