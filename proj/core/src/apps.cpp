#include "schurbound/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "schurbound/error.hpp"
#include "schurbound/spectral.hpp"
#include "schurbound/submatrix.hpp"

namespace schurbound {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

void DoaScenario::validate(double rel_tol) const {
  std::ostringstream msg;
  if (sources < 1) invalid("doa scenario: K must be at least 1");
  if (sources >= sensors) {
    msg << "doa scenario: K = " << sources << " must be smaller than N = " << sensors;
    invalid(msg.str());
  }
  if (subarrays < 1 || subarrays > sensors) {
    msg << "doa scenario: P = " << subarrays << " must lie in [1, N = " << sensors << "]";
    invalid(msg.str());
  }
  if (omega.size() != static_cast<std::size_t>(sources)) {
    msg << "doa scenario: omega has " << omega.size() << " entries, K = " << sources;
    invalid(msg.str());
  }
  for (double w : omega)
    if (!(w >= -std::numbers::pi && w < std::numbers::pi))
      invalid("doa scenario: omega entries must lie in [-pi, pi)");
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = i + 1; j < omega.size(); ++j)
      if (std::abs(omega[i] - omega[j]) <= 1e-9) invalid("doa scenario: omega entries must be distinct");
  if (sigma_s.size() != static_cast<std::size_t>(sources)) {
    msg << "doa scenario: sigma_s is " << sigma_s.size() << "x" << sigma_s.size() << ", K = "
        << sources;
    invalid(msg.str());
  }
  if (!classify_psd(sigma_s, rel_tol).is_psd())
    throw Error(ErrorKind::NotPositiveSemidefinite, "doa scenario: sigma_s is not positive semidefinite");
}

Matrix build_steering(int rows, const std::vector<double>& omega) {
  if (rows < 1) invalid("build_steering: need at least one row");
  Matrix v(static_cast<std::size_t>(rows), omega.size());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t k = 0; k < omega.size(); ++k)
      v(i, k) = std::polar(1.0, static_cast<double>(i) * omega[k]);
  return v;
}

HermitianMatrix smoothed_cov_direct(const DoaScenario& s) {
  const std::size_t k = static_cast<std::size_t>(s.sources);
  std::vector<Complex> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = std::polar(1.0, s.omega[i]);
  const Matrix step = Matrix::diagonal(d);
  const Matrix step_inv = step.adjoint();

  Matrix power = Matrix::identity(k);
  Matrix power_inv = Matrix::identity(k);
  Matrix sum(k, k);
  for (int p = 0; p < s.subarrays; ++p) {
    sum += power * s.sigma_s.matrix() * power_inv;
    power = power * step;
    power_inv = step_inv * power_inv;
  }
  return make_hermitian_unchecked(std::move(sum));
}

HermitianMatrix smoothed_cov_hadamard(const DoaScenario& s) {
  const Matrix vp = build_steering(s.subarrays, s.omega);
  return make_hermitian_unchecked(hadamard(s.sigma_s.matrix(), gram(vp).conjugate()));
}

DoaBoundReport doa_bound(const DoaScenario& s, const Settings& settings) {
  s.validate(settings.rel_tol);
  DoaBoundReport rep;
  const SpectralDecomposition eig_s = eig_hermitian(s.sigma_s);
  rep.r_sigma_s = eig_s.numeric_rank(settings.rel_tol);
  if (rep.r_sigma_s == 0) throw Error(ErrorKind::Degenerate, "doa_bound: sigma_s is numerically zero");
  rep.m = s.sources - rep.r_sigma_s + 1;
  rep.predicted_positive = s.subarrays >= rep.m;

  const Matrix vp = build_steering(s.subarrays, s.omega);
  const double ts = tilde_sigma(vp, static_cast<std::size_t>(rep.m), settings.subset_budget);
  rep.tilde_sigma_sq = ts * ts;
  rep.kappa_eff =
      eig_s.lambda_max() / eig_s.eigenvalues[static_cast<std::size_t>(rep.r_sigma_s - 1)];
  rep.min_diag = s.sigma_s.min_diag();
  rep.bound = rep.tilde_sigma_sq * rep.min_diag / rep.kappa_eff;

  const SpectralDecomposition eig_smoothed = eig_hermitian(smoothed_cov_direct(s));
  rep.lambda_min_smoothed = eig_smoothed.lambda_min();
  rep.bound_holds = rep.bound <= rep.lambda_min_smoothed +
                                     scaled_threshold(settings.rel_tol, eig_smoothed.lambda_max());
  return rep;
}

RankIdentity rank_identity_check(const DoaScenario& s, const Settings& settings) {
  const HermitianMatrix g = make_hermitian_unchecked(gram(build_steering(s.subarrays, s.omega)));
  RankIdentity out;
  out.expected = std::min(s.subarrays, s.sources);
  out.rank = rank_numeric(g, settings.rel_tol);
  out.kruskal_rank = kruskal_rank(g, settings.rel_tol, settings.subset_budget);
  out.holds = out.rank == out.expected && out.kruskal_rank == out.expected;
  return out;
}

void CpScenario::validate() const {
  std::ostringstream msg;
  if (latent_dim < 1) invalid("cp scenario: d must be at least 1");
  const auto d = static_cast<std::size_t>(latent_dim);
  if (a_load.cols() != d || b_load.cols() != d) {
    msg << "cp scenario: loadings have " << a_load.cols() << " and " << b_load.cols()
        << " columns, d = " << d;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  if (a_load.rows() == 0 || b_load.rows() == 0) invalid("cp scenario: empty loading matrix");
  if (g.empty()) invalid("cp scenario: need at least one lag vector g_k");
  for (const auto& gk : g)
    if (gk.size() != d) throw Error(ErrorKind::DimensionMismatch, "cp scenario: g_k must have length d");
  for (const Matrix* load : {&a_load, &b_load}) {
    for (std::size_t j = 0; j < d; ++j) {
      double norm2 = 0.0;
      for (std::size_t i = 0; i < load->rows(); ++i) norm2 += std::norm((*load)(i, j));
      if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
        msg << "cp scenario: loading column " << j << " has norm " << std::sqrt(norm2)
            << ", expected 1";
        invalid(msg.str());
      }
    }
  }
}

HermitianMatrix CpScenario::g_matrix() const {
  const auto d = static_cast<std::size_t>(latent_dim);
  Matrix gm(d, d);
  for (const auto& gk : g) {
    const std::vector<Complex> v(gk.begin(), gk.end());
    gm += outer(v, v);
  }
  return make_hermitian_unchecked(std::move(gm));
}

CpM1 cp_m1(const CpScenario& s) {
  s.validate();
  const auto d = static_cast<std::size_t>(s.latent_dim);
  const Matrix btb = gram(s.b_load);
  const Matrix a_adj = s.a_load.adjoint();

  Matrix lag_inner(d, d);
  for (const auto& gk : s.g) {
    const std::vector<Complex> diag(gk.begin(), gk.end());
    const Matrix gdiag = Matrix::diagonal(diag);
    lag_inner += gdiag * btb * gdiag;
  }

  CpM1 out;
  out.core = hadamard(s.g_matrix(), make_hermitian_unchecked(btb));
  out.lag_form = make_hermitian_unchecked(s.a_load * lag_inner * a_adj);
  out.factored_form = make_hermitian_unchecked(s.a_load * out.core.matrix() * a_adj);
  out.max_discrepancy = max_abs_diff(out.lag_form.matrix(), out.factored_form.matrix());
  return out;
}

double lambda_plus_min(const HermitianMatrix& m, double rel_tol) {
  const SpectralDecomposition eig = eig_hermitian(m);
  const int r = eig.numeric_rank(rel_tol);
  if (r == 0) return 0.0;
  return eig.eigenvalues[static_cast<std::size_t>(r - 1)];
}

CpBoundReport cp_bound(const CpScenario& s, const Settings& settings) {
  s.validate();
  CpBoundReport rep;
  rep.d = s.latent_dim;
  const auto d = static_cast<std::size_t>(s.latent_dim);

  const HermitianMatrix g = s.g_matrix();
  const HermitianMatrix btb = make_hermitian_unchecked(gram(s.b_load));
  const SpectralDecomposition eig_ata = eig_hermitian(make_hermitian_unchecked(gram(s.a_load)));
  const SpectralDecomposition eig_btb = eig_hermitian(btb);

  rep.rank_g = rank_numeric(g, settings.rel_tol);
  if (rep.rank_g == 0) throw Error(ErrorKind::Degenerate, "cp_bound: G is numerically zero");
  rep.d1 = eig_ata.numeric_rank(settings.rel_tol);
  rep.d2 = eig_btb.numeric_rank(settings.rel_tol);
  rep.kruskal_rank_g = kruskal_rank(g, settings.rel_tol, settings.subset_budget);
  rep.condition_met = rep.kruskal_rank_g >= rep.d - rep.d2 + 1;
  rep.predicate_g_bb = nonsingularity_predicate(g, btb, settings).holds;
  rep.predicate_bb_g = nonsingularity_predicate(btb, g, settings).holds;

  rep.mu_g = mu(g, d - static_cast<std::size_t>(rep.d2) + 1, settings.subset_budget);
  rep.kappa_eff_bb =
      eig_btb.lambda_max() / eig_btb.eigenvalues[static_cast<std::size_t>(rep.d2 - 1)];
  rep.sigma_d1_sq = eig_ata.eigenvalues[static_cast<std::size_t>(rep.d1 - 1)];
  rep.hadamard_floor = rep.mu_g.value / rep.kappa_eff_bb;
  rep.m1_floor = rep.sigma_d1_sq * rep.hadamard_floor;

  const CpM1 m1 = cp_m1(s);
  rep.m1_discrepancy = m1.max_discrepancy;
  const SpectralDecomposition eig_core = eig_hermitian(m1.core);
  rep.lambda_min_core = eig_core.lambda_min();
  const SpectralDecomposition eig_m1 = eig_hermitian(m1.factored_form);
  const int r_m1 = eig_m1.numeric_rank(settings.rel_tol);
  rep.lambda_plus_min_m1 = r_m1 == 0 ? 0.0 : eig_m1.eigenvalues[static_cast<std::size_t>(r_m1 - 1)];

  rep.core_floor_holds = rep.lambda_min_core >=
                         rep.hadamard_floor - scaled_threshold(settings.rel_tol, eig_core.spectral_radius());
  rep.m1_floor_holds = rep.lambda_plus_min_m1 >=
                       rep.m1_floor - scaled_threshold(settings.rel_tol, eig_m1.spectral_radius());
  return rep;
}

}  // namespace schurbound
