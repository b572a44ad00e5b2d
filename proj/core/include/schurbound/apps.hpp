#pragma once

#include <vector>

#include "schurbound/certify.hpp"
#include "schurbound/matrix.hpp"

namespace schurbound {

// ---------------------------------------------------------------------------
// Spatial smoothing for direction-of-arrival estimation on a uniform linear
// array. Source covariance Sigma_s (K x K), spatial frequencies omega_k, and
// P overlapping subarrays of N - P + 1 sensors each.
// ---------------------------------------------------------------------------

struct DoaScenario {
  int sensors = 0;     // N
  int sources = 0;     // K
  int subarrays = 0;   // P
  std::vector<double> omega;
  HermitianMatrix sigma_s;

  /// Throws InvalidArgument on any violated invariant.
  void validate(double rel_tol = kDefaultRelTol) const;
};

/// N x K Vandermonde matrix with entries e^{i r omega_k}, r = 0..N-1.
Matrix build_steering(int rows, const std::vector<double>& omega);

/// sum_{p=1}^{P} D^{p-1} Sigma_s D^{1-p}, D = diag(e^{i omega_k}).
HermitianMatrix smoothed_cov_direct(const DoaScenario& s);

/// Sigma_s o conj(V_P* V_P).
HermitianMatrix smoothed_cov_hadamard(const DoaScenario& s);

struct DoaBoundReport {
  int r_sigma_s = 0;
  int m = 0;  // K - r + 1
  double tilde_sigma_sq = 0.0;
  double kappa_eff = 0.0;
  double min_diag = 0.0;
  double bound = 0.0;
  double lambda_min_smoothed = 0.0;
  bool bound_holds = false;
  /// P >= K - r + 1: the bound is expected to be strictly positive.
  bool predicted_positive = false;
};

DoaBoundReport doa_bound(const DoaScenario& s, const Settings& settings = {});

struct RankIdentity {
  int expected = 0;  // min(P, K)
  int rank = 0;
  int kruskal_rank = 0;
  bool holds = false;
};

/// rank(V_P* V_P) == k(V_P* V_P) == min(P, K).
RankIdentity rank_identity_check(const DoaScenario& s, const Settings& settings = {});

// ---------------------------------------------------------------------------
// Matrix CP-factor model: Y_t = A X_t B* + noise with X_t diagonal. Loadings
// have unit-norm columns; g_k are the lag-k latent cross-covariance vectors.
// ---------------------------------------------------------------------------

struct CpScenario {
  int latent_dim = 0;  // d
  Matrix a_load;       // p x d
  Matrix b_load;       // q x d
  std::vector<std::vector<double>> g;

  void validate() const;
  /// G = sum_k g_k g_k*.
  HermitianMatrix g_matrix() const;
};

struct CpM1 {
  /// A (sum_k G_k B*B G_k) A*
  HermitianMatrix lag_form;
  /// A (G o B*B) A*
  HermitianMatrix factored_form;
  /// G o B*B
  HermitianMatrix core;
  double max_discrepancy = 0.0;
};

CpM1 cp_m1(const CpScenario& s);

struct CpBoundReport {
  int d = 0;
  int d1 = 0;  // rank A
  int d2 = 0;  // rank B*B
  int kruskal_rank_g = 0;
  int rank_g = 0;
  /// k_G >= d - d2 + 1
  bool condition_met = false;
  /// Nonsingularity predicate applied to (G, B*B) and to (B*B, G).
  bool predicate_g_bb = false;
  bool predicate_bb_g = false;
  MuResult mu_g;
  double kappa_eff_bb = 0.0;
  double sigma_d1_sq = 0.0;
  double hadamard_floor = 0.0;
  double m1_floor = 0.0;
  double lambda_min_core = 0.0;
  double lambda_plus_min_m1 = 0.0;
  bool core_floor_holds = false;
  bool m1_floor_holds = false;
  double m1_discrepancy = 0.0;
};

CpBoundReport cp_bound(const CpScenario& s, const Settings& settings = {});

/// Smallest eigenvalue above the numeric-rank threshold; 0 for a zero matrix.
double lambda_plus_min(const HermitianMatrix& m, double rel_tol = kDefaultRelTol);

}  // namespace schurbound
