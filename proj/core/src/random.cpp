#include "schurbound/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schurbound/error.hpp"
#include "schurbound/submatrix.hpp"

namespace schurbound {

Matrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex) {
  Matrix m(rows, cols);
  for (auto& v : m.data()) v = complex ? rng.complex_gaussian() : Complex(rng.gaussian());
  return m;
}

HermitianMatrix random_hermitian(Rng& rng, std::size_t n) {
  const Matrix g = random_gaussian_matrix(rng, n, n);
  return make_hermitian_unchecked(g + g.adjoint());
}

Matrix random_orthonormal_frame(Rng& rng, std::size_t n, std::size_t r) {
  if (r > n) throw Error(ErrorKind::InvalidArgument, "random_orthonormal_frame: r > n");
  Matrix f(n, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (;;) {
      std::vector<Complex> v(n);
      for (auto& x : v) x = rng.complex_gaussian();
      // Two passes of modified Gram-Schmidt.
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < k; ++j) {
          Complex dot{};
          for (std::size_t i = 0; i < n; ++i) dot += std::conj(f(i, j)) * v[i];
          for (std::size_t i = 0; i < n; ++i) v[i] -= dot * f(i, j);
        }
      double norm = 0.0;
      for (const auto& x : v) norm += std::norm(x);
      norm = std::sqrt(norm);
      if (norm < 1e-6) continue;
      for (std::size_t i = 0; i < n; ++i) f(i, k) = v[i] / norm;
      break;
    }
  }
  return f;
}

HermitianMatrix random_projection(Rng& rng, std::size_t n, std::size_t r) {
  const Matrix f = random_orthonormal_frame(rng, n, r);
  return make_hermitian_unchecked(f * f.adjoint());
}

HermitianMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank, bool complex) {
  const Matrix f = random_gaussian_matrix(rng, n, rank, complex);
  return make_hermitian_unchecked(f * f.adjoint());
}

HermitianMatrix random_psd_with_kruskal_rank(Rng& rng, std::size_t n, std::size_t k,
                                             double rel_tol) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    HermitianMatrix a = random_psd(rng, n, k);
    if (kruskal_rank_principal(a, rel_tol) == static_cast<int>(k)) return a;
  }
  throw Error(ErrorKind::NotConverged, "random_psd_with_kruskal_rank: rejection sampling failed");
}

std::vector<double> random_frequencies(Rng& rng, std::size_t count, double min_gap) {
  const double two_pi = 2.0 * std::numbers::pi;
  for (;;) {
    std::vector<double> w(count);
    for (auto& x : w) x = rng.uniform(-std::numbers::pi, std::numbers::pi);
    bool separated = true;
    for (std::size_t i = 0; i < count && separated; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const double d = std::abs(w[i] - w[j]);
        if (std::min(d, two_pi - d) < min_gap) {
          separated = false;
          break;
        }
      }
    if (separated) return w;
  }
}

DoaScenario random_doa_scenario(Rng& rng, const DoaScenarioShape& shape) {
  DoaScenario s;
  s.sources = rng.uniform_int(1, shape.max_sources);
  s.subarrays = rng.uniform_int(1, shape.max_subarrays);
  s.sensors = std::max(s.sources + 1, s.subarrays) + rng.uniform_int(0, 2);
  s.omega = random_frequencies(rng, static_cast<std::size_t>(s.sources));

  const int rank = shape.sigma_rank > 0 ? std::min(shape.sigma_rank, s.sources)
                                        : rng.uniform_int(1, s.sources);
  const auto k = static_cast<std::size_t>(s.sources);
  Matrix f(k, static_cast<std::size_t>(rank));
  // Moduli bounded away from zero keep every source power visible.
  for (auto& v : f.data())
    v = std::polar(rng.uniform(0.5, 1.5), rng.uniform(-std::numbers::pi, std::numbers::pi));
  s.sigma_s = make_hermitian_unchecked(f * f.adjoint());
  return s;
}

namespace {

Matrix normalize_columns(Matrix m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) /= norm;
  }
  return m;
}

// Replaces the last column with a random combination of the others.
void make_last_column_dependent(Rng& rng, Matrix& m) {
  const std::size_t last = m.cols() - 1;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, last) = 0.0;
  for (std::size_t j = 0; j < last; ++j) {
    const double c = rng.gaussian();
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, last) += c * m(i, j);
  }
}

}  // namespace

CpScenario random_cp_scenario(Rng& rng, const CpScenarioShape& shape) {
  CpScenario s;
  s.latent_dim = rng.uniform_int(1, shape.max_latent);
  const auto d = static_cast<std::size_t>(s.latent_dim);
  const auto p = static_cast<std::size_t>(rng.uniform_int(1, shape.max_rows));
  const auto q = static_cast<std::size_t>(rng.uniform_int(1, shape.max_rows));

  Matrix a = random_gaussian_matrix(rng, p, d, false);
  Matrix b = random_gaussian_matrix(rng, q, d, false);
  if (shape.rank_deficient && d >= 2) {
    make_last_column_dependent(rng, b);
    if (rng.uniform_int(0, 1) == 1) make_last_column_dependent(rng, a);
  }
  s.a_load = normalize_columns(std::move(a));
  s.b_load = normalize_columns(std::move(b));

  const int lags = rng.uniform_int(1, shape.max_lags);
  s.g.assign(static_cast<std::size_t>(lags), std::vector<double>(d));
  for (auto& gk : s.g)
    for (auto& v : gk) v = rng.gaussian();
  return s;
}

}  // namespace schurbound
