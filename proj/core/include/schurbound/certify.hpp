#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurbound/matrix.hpp"
#include "schurbound/submatrix.hpp"

namespace schurbound {

/// Every ingredient of the quantitative Hadamard-product eigenvalue bound
///
///   lambda_min(A o B) >= mu_{n - r_B + 1}(A) / kappa_eff(B) * min_i b_ii.
struct BoundReport {
  std::size_t n = 0;
  int r_b = 0;
  MuResult mu;
  double kappa_eff = 0.0;
  double min_diag = 0.0;
  double lambda_min_a = 0.0;
  double classical_bound = 0.0;
  double quantitative_bound = 0.0;
  double actual_lambda_min = 0.0;
  /// A o B - (mu / kappa_eff) (I o B) is positive semidefinite.
  bool loewner_verified = false;
  double margin = 0.0;
};

/// Lambda_min(A) * min_i b_ii. Throws NotPositiveSemidefinite unless both
/// factors are positive semidefinite.
double classical_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                       double rel_tol = kDefaultRelTol);

BoundReport quantitative_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                               const Settings& settings = {});

/// M - c D is positive semidefinite within rel_tol.
bool loewner_check(const HermitianMatrix& m, double c, const HermitianMatrix& d,
                   double rel_tol = kDefaultRelTol);

struct NonsingularityVerdict {
  bool holds = false;
  int kruskal_rank_a = 0;
  int rank_b = 0;
  std::size_t n = 0;
  double min_diag_b = 0.0;
  /// k_A, r_B and n, plus which part of the condition failed if any.
  std::string explanation;
};

/// Sufficient condition for A o B to be positive definite: B has no zero
/// diagonal entry and k_A >= n - r_B + 1. A false verdict does not mean the
/// product is singular.
NonsingularityVerdict nonsingularity_predicate(const HermitianMatrix& a, const HermitianMatrix& b,
                                               const Settings& settings = {});

struct ProjectionResiduals {
  double norm_identity = 0.0;  // | ||x||^2 - p (1 - p) |
  double q_idempotency = 0.0;
  double q_annihilates_x = 0.0;
  double q_trace = 0.0;  // | tr Q - (r - 1) |
  double r_idempotency = 0.0;
  double r_trace = 0.0;  // | tr R - r |
  double p1_idempotency = 0.0;  // corner-extreme branch only
  double p1_trace = 0.0;

  double max() const;
};

/// Bordered decomposition P = [[P1, x], [x*, p]] of a rank-r orthogonal
/// projection, taken at the last coordinate.
struct ProjectionParts {
  int rank = 0;
  HermitianMatrix p1;
  std::vector<Complex> x;
  double p = 0.0;
  /// P1 - (1/p) x x*, rank r - 1. Present iff 0 < p < 1.
  std::optional<HermitianMatrix> q;
  /// Q + x x* / ||x||^2, rank r. Present iff 0 < p < 1.
  std::optional<HermitianMatrix> r;
  ProjectionResiduals residuals;
};

/// Throws NotProjection when P fails the projection test at `tol`, and
/// ResidualTooLarge when any structural identity misses by more than `tol`.
ProjectionParts decompose_projection(const Matrix& p, double tol = 1e-9);

struct CertificateVerdict {
  std::size_t n = 0;
  int r = 0;
  /// mu_{n - r + 1}(C)
  double mu = 0.0;
  double lambda_min_c = 0.0;
  /// Right-hand side of the hypothesis: mu must be >= this (minus tolerance).
  double hypothesis_threshold = 0.0;
  double lambda_min_product = 0.0;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;

  /// hypothesis implies conclusion.
  bool consistent() const { return !hypothesis_holds || conclusion_holds; }
};

/// C o P for a rank-r orthogonal projection P: hypothesis mu_{n-r+1}(C) >= 0,
/// conclusion C o P >= 0.
CertificateVerdict projection_certificate(const HermitianMatrix& c, const Matrix& p,
                                          const Settings& settings = {});

/// C o B for positive semidefinite B of rank r: hypothesis
/// mu_{n-r+1}(C) >= -(kappa_eff(B) - 1) lambda_min(C), conclusion C o B >= 0.
CertificateVerdict indefinite_certificate(const HermitianMatrix& c, const HermitianMatrix& b,
                                          const Settings& settings = {});

struct ShiftResult {
  HermitianMatrix c;
  double shift = 0.0;
  /// mu_{n - r_B + 1}(A) / kappa_eff(B): the largest admissible shift.
  double max_shift = 0.0;
};

/// C = A - c I with c = fraction * mu_{n - r_B + 1}(A) / kappa_eff(B).
/// Throws Degenerate when that ratio is not positive.
ShiftResult shift_construction(const HermitianMatrix& a, const HermitianMatrix& b, double fraction,
                               const Settings& settings = {});

}  // namespace schurbound
