#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "carlitz/suite.hpp"

namespace {

using namespace carlitz;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(path, j.dump(2) + "\n");
}

i64 apply_precision_override(i64 N) {
  if (const char* env = std::getenv("CARLITZ_PRECISION_OVERRIDE")) {
    const i64 v = std::strtoll(env, nullptr, 10);
    if (v < 1) throw ConfigError("CARLITZ_PRECISION_OVERRIDE must be a positive integer");
    return v;
  }
  return N;
}

std::unique_ptr<Field> make_field(i64 q, i64 d) {
  const auto [p, e] = factor_prime_power(q);
  return std::make_unique<Field>(p, e, d);
}

int cmd_specialfn(i64 q, i64 d, i64 M, i64 N, i64 J, const std::string& emit_list,
                  const std::string& out_path) {
  auto F = make_field(q, d);
  const SpecialFnConfig cfg =
      J > 0 ? SpecialFnConfig::with_cutoff(*F, M, N, J) : SpecialFnConfig::make(*F, M, N);
  const SpecialBundle S = SpecialBundle::build(cfg);
  Json out;
  out["field"] = field_params_to_json(F->params());
  out["config"] = Json{{"J", cfg.J}, {"M", cfg.M}, {"N", cfg.N}};
  std::stringstream ss(emit_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "omega")
      out["omega"] = tseries_to_json(*F, S.omega);
    else if (item == "Omega")
      out["Omega"] = tseries_to_json(*F, S.Omega);
    else if (item == "pi")
      out["pi"] = laurent_to_json(*F, S.pi);
    else if (item == "beta")
      out["beta"] = tseries_to_json(*F, beta_poly(*F, d));
    else if (!item.empty())
      throw ConfigError("unknown emit item: " + item);
  }
  emit(out, out_path);
  return 0;
}

int cmd_periods(i64 q, i64 n, i64 N, const std::string& out_path) {
  auto F = make_field(q, 1);
  BundleCache cache(*F);
  const i64 uprec = periods_uprec(q, n, N);
  const SpecialBundle& S = cache.get(periods_tprec(q, n, uprec), uprec);
  const PeriodVector pv = period_coordinates(n, S);
  const ToeplitzReport toe = toeplitz_inverse_identity(n, S);
  const VanishingReport van = vanishing_pattern(n, S, N);
  Json out;
  out["n"] = n;
  Json zs = Json::array();
  for (const LaurentU& z : pv.z) zs.push_back(laurent_to_json(*F, z));
  out["z"] = std::move(zs);
  out["checks"] = Json{{"toeplitz", toe.pass ? "pass" : "fail"},
                       {"pattern", van.pass ? "pass" : "fail"}};
  emit(out, out_path);
  return (toe.pass && van.pass) ? 0 : 1;
}

int cmd_torsion(i64 q, i64 d, i64 nmax, i64 N, const std::string& out_path, bool json_only) {
  auto F = make_field(q, d);
  BundleCache cache(*F);
  const SpecialBundle& S = cache.get(torsion_tprec(*F, N), torsion_uprec(*F, N));
  const auto grid = torsion_grid(nmax, S, 4);
  if (!json_only) {
    std::cout << "zeta  deg  n  residual_valuation  precision  status\n";
    for (const TorsionReport& r : grid) {
      std::cout << r.zeta.v << "  " << r.zeta_degree << "  " << r.n << "  ";
      if (r.residual_valuation)
        std::cout << *r.residual_valuation;
      else
        std::cout << "infinity";
      std::cout << "  " << r.precision << "  " << (r.pass ? "pass" : "FAIL") << "\n";
    }
  }
  bool all = true;
  Json rows = Json::array();
  for (const TorsionReport& r : grid) {
    all = all && r.pass;
    Json row;
    row["zeta"] = F->coeffs(r.zeta);
    row["degree"] = r.zeta_degree;
    row["n"] = r.n;
    row["residual_valuation"] = r.residual_valuation ? Json(*r.residual_valuation) : Json("infinity");
    row["precision"] = r.precision;
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  if (!out_path.empty() || json_only) emit(Json{{"rows", rows}}, out_path);
  return all ? 0 : 1;
}

int cmd_prolong(const std::string& fixture_path, i64 k, const std::string& out_path) {
  const LoadedFixture fx = fixture_from_json(read_json_file(fixture_path));
  const Field& F = *fx.field;
  Json out;
  if (fx.motive)
    out = fixture_to_json(F, prolong_motive(*fx.motive, k));
  else if (fx.dual)
    out = fixture_to_json(F, prolong_dual(*fx.dual, k));
  else
    out = fixture_to_json(F, prolong_tmodule(*fx.tmodule, k));
  emit(out, out_path);
  return 0;
}

// Rank-1 fixtures with action (t-theta)^n own a canonical trivialization; the
// verifier builds it, prolongs both sides and reports the residual.
int cmd_verify(const std::string& fixture_path, i64 k, i64 N, const std::string& out_path) {
  const LoadedFixture fx = fixture_from_json(read_json_file(fixture_path));
  const Field& F = *fx.field;
  const auto detect_power = [&](const BlockMat& m) -> i64 {
    if (m.size() != 1) return -1;
    const i64 n = m.at(0, 0).degree();
    if (n < 1) return -1;
    const TSeries expected = TSeries::t_minus_theta(F).power(n);
    return tseries_residual(m.at(0, 0), expected).pass ? n : -1;
  };
  BundleCache cache(F);
  Residual r;
  if (fx.motive) {
    const i64 n = detect_power(fx.motive->theta);
    if (n < 0) throw ConfigError("no built-in trivialization for this fixture");
    const SpecialBundle& S = cache.get(2 * (n + k) + 8, N + 4 * F.q() * (n + k + 1));
    BlockMat m(F, 1);
    m.at(0, 0) = (TSeries::t_minus_theta(F) * S.Omega).power(n);
    const Trivialization ups{m, TrivFlavor::tau_side};
    r = verify_trivialization(prolong_motive(*fx.motive, k), prolong_trivialization(ups, k));
  } else if (fx.dual) {
    const i64 n = detect_power(fx.dual->theta_tilde);
    if (n < 0) throw ConfigError("no built-in trivialization for this fixture");
    const SpecialBundle& S =
        cache.get(2 * (n + k) + 8, F.q() * (N + 4 * F.q() * (n + k + 1)));
    BlockMat m(F, 1);
    m.at(0, 0) = S.Omega.power(n);
    const Trivialization psi{m, TrivFlavor::sigma_side};
    r = verify_trivialization(prolong_dual(*fx.dual, k), prolong_trivialization(psi, k));
  } else {
    throw ConfigError("verify expects a motive or dual fixture");
  }
  emit(residual_to_json(r), out_path);
  return r.pass ? 0 : 1;
}

int cmd_suite(const std::string& config_path, const std::string& out_path,
              const std::string& csv_path, const std::string& fixtures_dir) {
  SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : suite_config_from_json(read_json_file(config_path));
  cfg.N = apply_precision_override(cfg.N);
  if (!out_path.empty()) cfg.out = out_path;
  if (!csv_path.empty()) cfg.csv = csv_path;

  if (!fixtures_dir.empty()) {
    for (const auto& [stem, j] : standard_fixtures(cfg))
      write_text_file(fixtures_dir + "/" + stem + ".json", j.dump(2) + "\n");
    std::cout << "fixtures written to " << fixtures_dir << "\n";
    return 0;
  }

  const SuiteReport rep = run_suite(cfg);
  for (const CheckResult& r : rep.checks) {
    std::cout << (r.status == "pass" ? "[PASS]" : r.status == "starved" ? "[STARVED]" : "[FAIL]")
              << " " << r.name;
    if (r.residual_valuation)
      std::cout << " residual_valuation=" << *r.residual_valuation;
    std::cout << " precision=";
    if (r.precision >= kExactPrec)
      std::cout << "exact";
    else
      std::cout << r.precision;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << "exit code " << rep.exit_code << "\n";
  if (!cfg.out.empty()) write_text_file(cfg.out, suite_report_to_json(rep).dump(2) + "\n");
  if (!cfg.csv.empty()) write_text_file(cfg.csv, suite_report_to_csv(rep));
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic kernel for prolongations of Carlitz tensor powers"};
  app.require_subcommand(1);

  i64 q = 2, d = 1, M = 24, N = 96, J = 0, n = 1, k = 0, nmax = 3;
  std::string emit_list = "omega,Omega,pi", out_path, csv_path, fixture_path, config_path,
              fixtures_dir;
  bool json_only = false;

  auto* sp = app.add_subcommand("specialfn", "emit the special functions as JSON");
  sp->add_option("--q", q, "field size q = p^e");
  sp->add_option("--d", d, "extension degree");
  sp->add_option("--M", M, "t-truncation");
  sp->add_option("--N", N, "u-precision");
  sp->add_option("--J", J, "explicit product cutoff");
  sp->add_option("--emit", emit_list, "comma list: omega,Omega,pi,beta");
  sp->add_option("--json", out_path, "output path (default stdout)");

  auto* pe = app.add_subcommand("periods", "period-lattice coordinates and identities");
  pe->add_option("--q", q, "field size");
  pe->add_option("--n", n, "tensor power")->required();
  pe->add_option("--N", N, "target certified u-digits");
  pe->add_option("--json", out_path, "output path (default stdout)");

  auto* to = app.add_subcommand("torsion", "root-of-unity relations for the hyperderivatives");
  to->add_option("--q", q, "field size");
  to->add_option("--d", d, "degree of the evaluation points");
  to->add_option("--nmax", nmax, "highest hyperderivative order");
  to->add_option("--N", N, "target certified u-digits");
  to->add_option("--json", out_path, "output path");
  to->add_flag("--json-only", json_only, "suppress the text table");

  auto* pr = app.add_subcommand("prolong", "prolong a fixture descriptor");
  pr->add_option("--fixture", fixture_path, "fixture JSON path")->required();
  pr->add_option("--k", k, "prolongation level")->required();
  pr->add_option("--json", out_path, "output path (default stdout)");

  auto* ve = app.add_subcommand("verify", "verify the rigid analytic trivialization of a fixture");
  ve->add_option("--fixture", fixture_path, "fixture JSON path")->required();
  ve->add_option("--k", k, "prolongation level");
  ve->add_option("--N", N, "target certified u-digits");
  ve->add_option("--json", out_path, "output path (default stdout)");

  auto* su = app.add_subcommand("suite", "run the full verification suite");
  su->add_option("--config", config_path, "config JSON path");
  su->add_option("--json", out_path, "report path");
  su->add_option("--csv", csv_path, "CSV residual table path");
  su->add_option("--emit-fixtures", fixtures_dir, "write the golden fixture set and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    N = apply_precision_override(N);
    if (sp->parsed()) return cmd_specialfn(q, d, M, N, J, emit_list, out_path);
    if (pe->parsed()) return cmd_periods(q, n, N, out_path);
    if (to->parsed()) return cmd_torsion(q, d, nmax, N, out_path, json_only);
    if (pr->parsed()) return cmd_prolong(fixture_path, k, out_path);
    if (ve->parsed()) return cmd_verify(fixture_path, k, N, out_path);
    if (su->parsed()) return cmd_suite(config_path, out_path, csv_path, fixtures_dir);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionLoss& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const DivergentEvaluation& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const SingularMatrix& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
