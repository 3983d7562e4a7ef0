#include "carlitz/json_io.hpp"

namespace carlitz {

Json field_params_to_json(const FieldParams& P) {
  return Json{{"p", P.p}, {"e", P.e}, {"d", P.d}, {"modulus", P.modulus}};
}

FieldParams field_params_from_json(const Json& j) {
  FieldParams P;
  P.p = j.at("p").get<i64>();
  P.e = j.at("e").get<i64>();
  P.d = j.at("d").get<i64>();
  P.modulus = j.at("modulus").get<std::vector<int>>();
  return P;
}

Json laurent_to_json(const Field& F, const LaurentU& x) {
  Json coeffs = Json::array();
  for (const FieldElem c : x.coeffs()) coeffs.push_back(F.coeffs(c));
  Json out;
  out["lead"] = x.lead();
  out["prec"] = x.exact() ? Json("exact") : Json(x.prec());
  out["coeffs"] = std::move(coeffs);
  return out;
}

LaurentU laurent_from_json(const Field& F, const Json& j) {
  const i64 lead = j.at("lead").get<i64>();
  const Json& jp = j.at("prec");
  const i64 prec = jp.is_string() ? kExactPrec : jp.get<i64>();
  std::vector<FieldElem> coeffs;
  for (const Json& c : j.at("coeffs")) {
    const auto digits = c.get<std::vector<int>>();
    coeffs.push_back(F.from_coeffs(digits));
  }
  return LaurentU::make(F, lead, std::move(coeffs), prec);
}

Json tseries_to_json(const Field& F, const TSeries& x) {
  Json coeffs = Json::array();
  for (i64 m = 0; m < x.size(); ++m) coeffs.push_back(laurent_to_json(F, x.coeff(m)));
  Json out;
  out["kind"] = x.is_polynomial() ? "polynomial" : "series";
  out["tprec"] = x.is_polynomial() ? x.size() : x.tprec();
  out["coeffs"] = std::move(coeffs);
  return out;
}

TSeries tseries_from_json(const Field& F, const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<LaurentU> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(laurent_from_json(F, c));
  if (kind == "polynomial") return TSeries::from_coeffs(F, std::move(coeffs), Kind::polynomial, 0);
  return TSeries::from_coeffs(F, std::move(coeffs), Kind::series, j.at("tprec").get<i64>());
}

Json blockmat_to_json(const Field& F, const BlockMat& m) {
  Json rows = Json::array();
  for (i64 i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (i64 j = 0; j < m.size(); ++j) row.push_back(tseries_to_json(F, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockMat blockmat_from_json(const Field& F, const Json& j) {
  const i64 n = static_cast<i64>(j.size());
  BlockMat m(F, n);
  for (i64 i = 0; i < n; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<i64>(row.size()) != n) throw ShapeMismatch("matrix rows must have equal length");
    for (i64 k = 0; k < n; ++k) m.at(i, k) = tseries_from_json(F, row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

Json residual_to_json(const Residual& r) {
  Json out;
  out["pass"] = r.pass;
  out["residual_valuation"] = r.valuation ? Json(*r.valuation) : Json("infinity");
  out["precision"] = r.precision >= kExactPrec ? Json("exact") : Json(r.precision);
  return out;
}

Json fixture_to_json(const Field& F, const MotiveDesc& M) {
  Json out;
  out["type"] = "motive";
  out["field"] = field_params_to_json(F.params());
  out["rank"] = M.rank;
  out["theta"] = blockmat_to_json(F, M.theta);
  if (M.divisibility_ell) out["ell"] = *M.divisibility_ell;
  return out;
}

Json fixture_to_json(const Field& F, const DualMotiveDesc& M) {
  Json out;
  out["type"] = "dual";
  out["field"] = field_params_to_json(F.params());
  out["rank"] = M.rank;
  out["theta_tilde"] = blockmat_to_json(F, M.theta_tilde);
  return out;
}

Json fixture_to_json(const Field& F, const TModuleDesc& E) {
  Json out;
  out["type"] = "tmodule";
  out["field"] = field_params_to_json(F.params());
  out["dim"] = E.dim;
  Json mats = Json::array();
  for (const BlockMat& A : E.A) mats.push_back(blockmat_to_json(F, A));
  out["A"] = std::move(mats);
  return out;
}

LoadedFixture fixture_from_json(const Json& j) {
  LoadedFixture out;
  out.type = j.at("type").get<std::string>();
  out.field = std::make_unique<Field>(field_params_from_json(j.at("field")));
  const Field& F = *out.field;
  if (out.type == "motive") {
    MotiveDesc M;
    M.rank = j.at("rank").get<i64>();
    M.theta = blockmat_from_json(F, j.at("theta"));
    if (j.contains("ell")) M.divisibility_ell = j.at("ell").get<i64>();
    if (M.theta.size() != M.rank) throw ShapeMismatch("rank does not match the action matrix");
    out.motive = std::move(M);
  } else if (out.type == "dual") {
    DualMotiveDesc M;
    M.rank = j.at("rank").get<i64>();
    M.theta_tilde = blockmat_from_json(F, j.at("theta_tilde"));
    if (M.theta_tilde.size() != M.rank) throw ShapeMismatch("rank does not match the action matrix");
    out.dual = std::move(M);
  } else if (out.type == "tmodule") {
    TModuleDesc E;
    E.dim = j.at("dim").get<i64>();
    for (const Json& a : j.at("A")) E.A.push_back(blockmat_from_json(F, a));
    if (E.A.empty() || E.A[0].size() != E.dim) throw ShapeMismatch("dimension does not match A0");
    if (!tmodule_nilpotency_check(E)) throw ConfigError("A0 - theta is not nilpotent");
    out.tmodule = std::move(E);
  } else {
    throw ConfigError("unknown fixture type: " + out.type);
  }
  return out;
}

}  // namespace carlitz
