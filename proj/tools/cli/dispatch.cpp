#include "cli/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/matrix_file.hpp"
#include "cli/scenario_file.hpp"
#include "cli/selftest.hpp"
#include "schurbound/schurbound.hpp"

namespace schurbound::cli {

namespace {

struct Options {
  std::string a, b, c, p;
  std::string scenario;
  std::optional<std::size_t> m;
  double tol = kDefaultRelTol;
  std::uint64_t budget = kDefaultSubsetBudget;
  std::uint64_t seed = 0;
  std::string json;
  double fraction = 1.0;
  bool timing = false;

  Settings settings() const { return {tol, budget}; }
};

/// Missing required flag; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string& require(const std::string& value, const char* flag, const char* command) {
  if (value.empty())
    throw UsageError(std::string(command) + " requires " + flag + " <path>");
  return value;
}

HermitianMatrix load_hermitian(const std::string& path) {
  return HermitianMatrix(parse_matrix(path));
}

void set_verdict(ReportDocument& doc, int code, const std::string& reason = {}) {
  doc.exit_code = code;
  doc.results["verified"] = code == kVerified;
  doc.results["reason"] = reason;
}

// --- commands ---------------------------------------------------------------

void cmd_bound(const Options& o, ReportDocument& doc) {
  const HermitianMatrix a = load_hermitian(require(o.a, "--a", "bound"));
  const HermitianMatrix b = load_hermitian(require(o.b, "--b", "bound"));
  const Settings s = o.settings();

  const double diag_tol = scaled_threshold(s.rel_tol, b.matrix().max_abs());
  if (a.size() == b.size() && b.size() > 0 && b.min_diag() <= diag_tol) {
    try {
      doc.results = to_json(quantitative_bound(a, b, s));
    } catch (const Error&) {
      doc.results["min_diag"] = b.min_diag();
    }
    set_verdict(doc, kNotVerified, "min_diag is zero");
    return;
  }

  const BoundReport rep = quantitative_bound(a, b, s);
  doc.results = to_json(rep);
  doc.results["nonsingularity"] = to_json(nonsingularity_predicate(a, b, s));
  if (!rep.loewner_verified) {
    set_verdict(doc, kNotVerified, "Loewner inequality A o B >= (mu/kappa_eff)(I o B) failed");
  } else if (rep.quantitative_bound <= scaled_threshold(s.rel_tol, rep.actual_lambda_min)) {
    set_verdict(doc, kNotVerified, "bound is not positive: mu_{n-r_B+1}(A) <= 0 (k_A < n - r_B + 1)");
  } else {
    set_verdict(doc, kVerified);
  }
}

void cmd_classical(const Options& o, ReportDocument& doc) {
  const HermitianMatrix a = load_hermitian(require(o.a, "--a", "classical"));
  const HermitianMatrix b = load_hermitian(require(o.b, "--b", "classical"));
  const double bound = classical_bound(a, b, o.tol);
  const SpectralDecomposition e = eig_hermitian(hadamard(a, b));
  doc.results["classical_bound"] = bound;
  doc.results["actual_lambda_min"] = e.lambda_min();
  const bool holds = bound <= e.lambda_min() + scaled_threshold(o.tol, e.spectral_radius());
  set_verdict(doc, holds ? kVerified : kNotVerified, holds ? "" : "classical bound exceeds lambda_min(A o B)");
}

void cmd_kruskal(const Options& o, ReportDocument& doc) {
  const std::string& path = !o.a.empty() ? o.a : require(o.b, "--a", "kruskal");
  const Matrix m = parse_matrix(path);
  doc.results["rows"] = m.rows();
  doc.results["cols"] = m.cols();
  doc.results["kruskal_rank"] = kruskal_rank(m, o.tol, o.budget);
  if (m.is_square()) {
    try {
      const HermitianMatrix h(m);
      doc.results["rank"] = rank_numeric(h, o.tol);
      doc.results["definiteness"] = to_string(classify_psd(h, o.tol).kind);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotHermitian) throw;
    }
  }
  set_verdict(doc, kVerified);
}

void cmd_mu(const Options& o, ReportDocument& doc) {
  const HermitianMatrix a = load_hermitian(require(o.a, "--a", "mu"));
  if (!o.m) throw UsageError("mu requires --m <order>");
  doc.results = to_json(mu(a, *o.m, o.budget));
  set_verdict(doc, kVerified);
}

void cmd_kappa(const Options& o, ReportDocument& doc) {
  const std::string& path = !o.b.empty() ? o.b : require(o.a, "--b", "kappa");
  const HermitianMatrix b = load_hermitian(path);
  const SpectralDecomposition e = eig_hermitian(b);
  if (!classify_psd(e, o.tol).is_psd())
    throw Error(ErrorKind::NotPositiveSemidefinite, "kappa: matrix is not positive semidefinite");
  doc.results["rank"] = e.numeric_rank(o.tol);
  doc.results["kappa_eff"] = kappa_eff(b, o.tol);
  doc.results["eigenvalues"] = e.eigenvalues;
  set_verdict(doc, kVerified);
}

void cmd_projection(const Options& o, ReportDocument& doc) {
  const HermitianMatrix c = load_hermitian(require(o.c, "--c", "projection"));
  const Matrix p = parse_matrix(require(o.p, "--p", "projection"));
  const CertificateVerdict v = projection_certificate(c, p, o.settings());
  doc.results = to_json(v);
  if (p.rows() >= 2) {
    const ProjectionParts parts = decompose_projection(p, scaled_threshold(o.tol, p.max_abs()));
    ordered_json d;
    d["corner"] = parts.p;
    double xnorm2 = 0.0;
    for (const auto& v : parts.x) xnorm2 += std::norm(v);
    d["x_norm_sq"] = xnorm2;
    d["branch"] = parts.q ? "interior" : "extreme";
    d["residuals"] = to_json(parts.residuals);
    doc.results["decomposition"] = d;
  }
  if (!v.consistent()) {
    set_verdict(doc, kNotVerified, "hypothesis holds but C o P is not positive semidefinite");
  } else if (!v.hypothesis_holds) {
    set_verdict(doc, kNotVerified, "hypothesis not met: mu_{n-r+1}(C) < 0");
  } else {
    set_verdict(doc, kVerified);
  }
}

void cmd_certify_indefinite(const Options& o, ReportDocument& doc) {
  const HermitianMatrix b = load_hermitian(require(o.b, "--b", "certify-indefinite"));
  HermitianMatrix c;
  if (!o.c.empty()) {
    c = load_hermitian(o.c);
  } else {
    const HermitianMatrix a = load_hermitian(require(o.a, "--c or --a", "certify-indefinite"));
    const ShiftResult shift = shift_construction(a, b, o.fraction, o.settings());
    doc.results["shift"] = shift.shift;
    doc.results["max_shift"] = shift.max_shift;
    doc.results["fraction"] = o.fraction;
    c = shift.c;
  }
  const CertificateVerdict v = indefinite_certificate(c, b, o.settings());
  const ordered_json verdict = to_json(v);
  for (const auto& [key, value] : verdict.items()) doc.results[key] = value;
  doc.results["C_definiteness"] = to_string(classify_psd(c, o.tol).kind);
  if (!v.consistent()) {
    set_verdict(doc, kNotVerified, "hypothesis holds but C o B is not positive semidefinite");
  } else if (!v.hypothesis_holds) {
    set_verdict(doc, kNotVerified,
                "hypothesis not met: mu_{n-r+1}(C) < -(kappa_eff(B) - 1) lambda_min(C)");
  } else {
    set_verdict(doc, kVerified);
  }
}

void cmd_doa(const Options& o, ReportDocument& doc) {
  const std::string& path = require(o.scenario, "--scenario", "doa-bound");
  const auto json = load_json(path);
  if (scenario_kind(json, path) != ScenarioKind::Doa)
    throw UsageError("doa-bound: scenario is not a DOA scenario");
  const DoaScenario s = doa_scenario_from_json(json, path);
  const DoaBoundReport rep = doa_bound(s, o.settings());
  doc.results = to_json(rep);
  doc.results["factorization_discrepancy"] =
      max_abs_diff(smoothed_cov_direct(s).matrix(), smoothed_cov_hadamard(s).matrix());
  doc.results["rank_identity"] = to_json(rank_identity_check(s, o.settings()));
  if (!rep.bound_holds) set_verdict(doc, kNotVerified, "bound exceeds lambda_min of the smoothed covariance");
  else set_verdict(doc, kVerified);
}

void cmd_cp(const Options& o, ReportDocument& doc) {
  const std::string& path = require(o.scenario, "--scenario", "cp-bound");
  const auto json = load_json(path);
  if (scenario_kind(json, path) != ScenarioKind::Cp)
    throw UsageError("cp-bound: scenario is not a CP scenario");
  const CpBoundReport rep = cp_bound(cp_scenario_from_json(json, path), o.settings());
  doc.results = to_json(rep);
  if (!rep.condition_met) {
    set_verdict(doc, kNotVerified, "hypothesis not met: k_G < d - d2 + 1");
  } else if (!rep.core_floor_holds || !rep.m1_floor_holds) {
    set_verdict(doc, kNotVerified, "eigenvalue floor check failed");
  } else {
    set_verdict(doc, kVerified);
  }
}

void cmd_selftest(const Options& o, ReportDocument& doc) {
  const auto outcomes = run_selftest(o.seed, o.settings());
  ordered_json suites = ordered_json::array();
  int failed = 0;
  for (const auto& s : outcomes) {
    suites.push_back({{"name", s.name}, {"cases", s.cases}, {"passed", s.passed},
                      {"failed", s.failed}, {"worst_residual", s.worst}});
    failed += s.failed;
  }
  doc.results["suites"] = suites;
  doc.results["total_failed"] = failed;
  if (failed > 0) set_verdict(doc, kNotVerified, "property suite failures");
  else set_verdict(doc, kVerified);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPositiveSemidefinite:
    case ErrorKind::Degenerate:
    case ErrorKind::NotConverged:
    case ErrorKind::ResidualTooLarge:
      return kNotVerified;
    default:
      return kUsageError;
  }
}

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Eigenvalue lower bounds and certificates for Hadamard products", "schurbound"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--a", o.a, "matrix file for A");
  app.add_option("--b", o.b, "matrix file for B");
  app.add_option("--c", o.c, "matrix file for C");
  app.add_option("--p", o.p, "matrix file for the projection P");
  app.add_option("--scenario", o.scenario, "JSON scenario file");
  app.add_option("--m", o.m, "submatrix order for mu");
  app.add_option("--tol", o.tol, "relative tolerance for rank and definiteness decisions")
      ->capture_default_str();
  app.add_option("--budget", o.budget, "maximum subsets per enumeration")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--json", o.json, "write the report to this path instead of stdout");
  app.add_option("--fraction", o.fraction, "shift fraction in (0, 1] for certify-indefinite")
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "record wall-clock time in timing_ms");

  using Command = std::function<void(const Options&, ReportDocument&)>;
  const std::vector<std::tuple<const char*, const char*, Command>> commands = {
      {"bound", "quantitative lower bound for lambda_min(A o B)", cmd_bound},
      {"classical", "lambda_min(A) * min_i b_ii", cmd_classical},
      {"kruskal", "Kruskal rank of a matrix", cmd_kruskal},
      {"mu", "smallest eigenvalue over all m x m principal submatrices", cmd_mu},
      {"kappa", "effective condition number", cmd_kappa},
      {"projection", "certificate for C o P with P an orthogonal projection", cmd_projection},
      {"certify-indefinite", "certificate for C o B with C indefinite", cmd_certify_indefinite},
      {"doa-bound", "smoothed source covariance eigenvalue floor", cmd_doa},
      {"cp-bound", "CP-factor model M1 eigenvalue floor", cmd_cp},
      {"selftest", "seeded property suites", cmd_selftest},
  };
  std::map<const CLI::App*, const Command*> handlers;
  for (const auto& [name, help, fn] : commands) handlers[app.add_subcommand(name, help)] = &fn;

  DispatchResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : kUsageError;
    return result;
  }
  const CLI::App* sub = app.get_subcommands().front();

  ReportDocument& doc = result.report;
  result.has_report = true;
  result.json_path = o.json;
  doc.command = sub->get_name();
  auto add_input = [&](const char* key, const std::string& v) {
    if (!v.empty()) doc.inputs[key] = v;
  };
  add_input("a", o.a);
  add_input("b", o.b);
  add_input("c", o.c);
  add_input("p", o.p);
  add_input("scenario", o.scenario);
  if (o.m) doc.inputs["m"] = *o.m;
  doc.inputs["tol"] = o.tol;
  doc.inputs["budget"] = o.budget;
  doc.inputs["seed"] = o.seed;
  if (doc.command == "certify-indefinite" && o.c.empty()) doc.inputs["fraction"] = o.fraction;

  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](int code, const std::string& kind, const std::string& what) {
    doc.results = ordered_json::object();
    doc.results["error"] = kind;
    set_verdict(doc, code, what);
  };
  try {
    (*handlers.at(sub))(o, doc);
  } catch (const Error& e) {
    fail(exit_code_for(e.kind()), to_string(e.kind()), e.what());
  } catch (const ParseError& e) {
    fail(kUsageError, "parse_error", e.what());
  } catch (const UsageError& e) {
    fail(kUsageError, "usage_error", e.what());
  } catch (const std::exception& e) {
    fail(kUsageError, "error", e.what());
  }
  if (o.timing) {
    doc.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  result.exit_code = doc.exit_code;
  if (doc.exit_code != kVerified) err << "schurbound " << doc.command << ": "
                                      << doc.results.value("reason", std::string{}) << "\n";
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  DispatchResult r = dispatch(args, out, err);
  if (!r.has_report) return r.exit_code;
  try {
    if (r.json_path.empty()) emit_report(r.report, out);
    else emit_report(r.report, r.json_path);
  } catch (const std::exception& e) {
    err << "schurbound: " << e.what() << "\n";
    return kUsageError;
  }
  return r.exit_code;
}

}  // namespace schurbound::cli
