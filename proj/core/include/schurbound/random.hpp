#pragma once

#include <cstdint>
#include <random>

#include "schurbound/apps.hpp"
#include "schurbound/matrix.hpp"

namespace schurbound {

/// Seeded source for every randomized construction. Identical seeds give
/// identical streams within one build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Matrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex = true);

HermitianMatrix random_hermitian(Rng& rng, std::size_t n);

/// n x r matrix with orthonormal columns (Gram-Schmidt on Gaussian vectors).
Matrix random_orthonormal_frame(Rng& rng, std::size_t n, std::size_t r);

/// F F* for a random orthonormal n x r frame F.
HermitianMatrix random_projection(Rng& rng, std::size_t n, std::size_t r);

/// F F* for a Gaussian n x rank factor F.
HermitianMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank, bool complex = true);

/// Gram matrix of a Gaussian n x k frame, resampled until its Kruskal rank
/// is exactly k (rank and Kruskal rank both k).
HermitianMatrix random_psd_with_kruskal_rank(Rng& rng, std::size_t n, std::size_t k,
                                             double rel_tol = kDefaultRelTol);

/// K distinct frequencies in [-pi, pi) with circular separation >= min_gap.
std::vector<double> random_frequencies(Rng& rng, std::size_t count, double min_gap = 0.1);

struct DoaScenarioShape {
  int max_sources = 4;
  int max_subarrays = 6;
  /// 0 draws the rank of sigma_s uniformly from 1..K.
  int sigma_rank = 0;
};

DoaScenario random_doa_scenario(Rng& rng, const DoaScenarioShape& shape = {});

struct CpScenarioShape {
  int max_latent = 4;
  int max_rows = 5;
  int max_lags = 3;
  /// Force linearly dependent columns in B (and sometimes A) when d >= 2.
  bool rank_deficient = false;
};

CpScenario random_cp_scenario(Rng& rng, const CpScenarioShape& shape = {});

}  // namespace schurbound
