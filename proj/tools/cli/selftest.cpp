#include "cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "schurbound/schurbound.hpp"

namespace schurbound::cli {

namespace {

using Case = std::function<double(Rng&)>;  // returns residual, NaN on failure

struct Suite {
  const char* name;
  int cases;
  double limit;  // case passes iff residual <= limit
  Case run;
};

std::size_t pick(Rng& rng, int lo, int hi) { return static_cast<std::size_t>(rng.uniform_int(lo, hi)); }

double eig_residual(Rng& rng) {
  const std::size_t n = pick(rng, 1, 10);
  const HermitianMatrix a = random_hermitian(rng, n);
  const SpectralDecomposition e = eig_hermitian(a);
  std::vector<Complex> lambda(e.eigenvalues.begin(), e.eigenvalues.end());
  const Matrix recon = e.eigenvectors * Matrix::diagonal(lambda) * e.eigenvectors.adjoint();
  const double scale = 1.0 + a.matrix().max_abs();
  const double recon_err = max_abs_diff(recon, a.matrix()) / scale;
  const double ortho_err = max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, Matrix::identity(n)) / scale;
  const bool sorted = std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend());
  return sorted ? std::max(recon_err, ortho_err) : NAN;
}

double schur_product(Rng& rng) {
  const std::size_t n = pick(rng, 2, 8);
  const HermitianMatrix a = random_psd(rng, n, pick(rng, 1, static_cast<int>(n)));
  const HermitianMatrix b = random_psd(rng, n, pick(rng, 1, static_cast<int>(n)));
  const SpectralDecomposition e = eig_hermitian(hadamard(a, b));
  return -e.lambda_min() / std::max(1.0, e.lambda_max());
}

double mu_interlacing(Rng& rng) {
  const std::size_t n = pick(rng, 1, 7);
  const HermitianMatrix a = random_hermitian(rng, n);
  double prev = mu(a, 1).value;
  if (prev != a.min_diag()) return NAN;
  double worst = 0.0;
  for (std::size_t m = 2; m <= n; ++m) {
    const double cur = mu(a, m).value;
    worst = std::max(worst, cur - prev);
    prev = cur;
  }
  if (prev != lambda_min(a)) return NAN;
  return worst;
}

double quantitative(Rng& rng, const Settings& settings) {
  const std::size_t n = pick(rng, 2, 7);
  const HermitianMatrix a = random_psd(rng, n, pick(rng, 1, static_cast<int>(n)));
  const HermitianMatrix b = random_psd(rng, n, pick(rng, 1, static_cast<int>(n)));
  const BoundReport rep = quantitative_bound(a, b, settings);
  const double c = rep.mu.value / rep.kappa_eff;
  const double lmin = lambda_min(hadamard(a, b) - b.diagonal_part().scaled(c));
  return rep.loewner_verified ? -lmin : NAN;
}

double projection_cert(Rng& rng, const Settings& settings) {
  const std::size_t n = pick(rng, 2, 7);
  const std::size_t r = pick(rng, 1, static_cast<int>(n));
  const HermitianMatrix a = random_psd(rng, n, pick(rng, 1, static_cast<int>(n)));
  const HermitianMatrix c = a.shifted(-mu(a, n - r + 1).value);
  const CertificateVerdict v = projection_certificate(c, random_projection(rng, n, r).matrix(), settings);
  return v.hypothesis_holds && v.conclusion_holds ? -v.lambda_min_product : NAN;
}

double indefinite_cert(Rng& rng, const Settings& settings) {
  const std::size_t n = pick(rng, 2, 6);
  const std::size_t k = pick(rng, 1, static_cast<int>(n) - 1);
  const std::size_t rb = pick(rng, static_cast<int>(n - k + 1), static_cast<int>(n));
  const HermitianMatrix a = random_psd_with_kruskal_rank(rng, n, k, settings.rel_tol);
  const HermitianMatrix b = random_psd(rng, n, rb);
  const ShiftResult shift = shift_construction(a, b, 1.0, settings);
  const CertificateVerdict v = indefinite_certificate(shift.c, b, settings);
  return v.hypothesis_holds && v.conclusion_holds ? -v.lambda_min_product : NAN;
}

double projection_parts(Rng& rng) {
  const std::size_t n = pick(rng, 2, 8);
  const std::size_t r = pick(rng, 0, static_cast<int>(n));
  return decompose_projection(random_projection(rng, n, r).matrix(), 1e-8).residuals.max();
}

double doa_factorization(Rng& rng, const Settings& settings) {
  const DoaScenario s = random_doa_scenario(rng);
  const double diff = max_abs_diff(smoothed_cov_direct(s).matrix(), smoothed_cov_hadamard(s).matrix());
  const DoaBoundReport rep = doa_bound(s, settings);
  const bool ranks = rank_identity_check(s, settings).holds;
  return rep.bound_holds && ranks ? diff : NAN;
}

double cp_forms(Rng& rng, const Settings& settings) {
  CpScenarioShape shape;
  shape.rank_deficient = rng.uniform_int(0, 1) == 1;
  const CpScenario s = random_cp_scenario(rng, shape);
  const CpBoundReport rep = cp_bound(s, settings);
  if (rep.condition_met && !(rep.core_floor_holds && rep.m1_floor_holds)) return NAN;
  return rep.m1_discrepancy;
}

}  // namespace

std::vector<SuiteOutcome> run_selftest(std::uint64_t seed, const Settings& settings) {
  const std::vector<Suite> suites = {
      {"eig_residuals", 200, 1e-10, eig_residual},
      {"schur_product", 200, settings.rel_tol, schur_product},
      {"mu_interlacing", 100, 1e-12, mu_interlacing},
      {"quantitative_bound", 200, 1e-8, [&](Rng& r) { return quantitative(r, settings); }},
      {"projection_certificate", 100, 1e-8, [&](Rng& r) { return projection_cert(r, settings); }},
      {"indefinite_certificate", 100, 1e-8, [&](Rng& r) { return indefinite_cert(r, settings); }},
      {"projection_decomposition", 100, 1e-8, projection_parts},
      {"doa_factorization", 100, 1e-10, [&](Rng& r) { return doa_factorization(r, settings); }},
      {"cp_m1", 100, 1e-10, [&](Rng& r) { return cp_forms(r, settings); }},
  };

  std::vector<SuiteOutcome> out;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const Suite& suite = suites[i];
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + i + 1);
    SuiteOutcome o;
    o.name = suite.name;
    o.worst = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < suite.cases; ++c) {
      ++o.cases;
      double residual = NAN;
      try {
        residual = suite.run(rng);
      } catch (const Error&) {
        residual = NAN;
      }
      if (std::isnan(residual)) {
        ++o.failed;
        continue;
      }
      o.worst = std::max(o.worst, residual);
      if (residual <= suite.limit) ++o.passed;
      else ++o.failed;
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace schurbound::cli
