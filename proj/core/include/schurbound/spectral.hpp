#pragma once

#include <vector>

#include "schurbound/matrix.hpp"

namespace schurbound {

/// Eigenvalues in non-increasing order with orthonormal eigenvectors stored
/// as the columns of `eigenvectors`.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  double lambda_max() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
  /// max_i |lambda_i|
  double spectral_radius() const;
  /// Count of eigenvalues with |lambda| > rel * max(1, spectral_radius()).
  int numeric_rank(double rel_tol) const;
};

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefiniteSingular,
  Indefinite,
};

const char* to_string(Definiteness d) noexcept;

struct PsdClass {
  Definiteness kind;
  double witness;  // lambda_min

  bool is_psd() const { return kind != Definiteness::Indefinite; }
  bool is_pd() const { return kind == Definiteness::PositiveDefinite; }
};

struct ProjectionTest {
  bool is_projection = false;
  int rank = 0;
};

struct JacobiOptions {
  double off_diagonal_rel = 1e-14;
  int max_sweeps = 100;
};

/// Entrywise product. Throws DimensionMismatch on differing sizes.
HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);

/// Cyclic complex Jacobi eigensolver.
///
/// Sweeps the strict upper triangle in row-major order; each pivot (p, q)
/// is annihilated by a phase rotation that makes a_pq real followed by a
/// real Givens rotation. Stops once the off-diagonal Frobenius mass falls
/// below `off_diagonal_rel * ||A||_F`; throws NotConverged after
/// `max_sweeps`.
SpectralDecomposition eig_hermitian(const HermitianMatrix& a, JacobiOptions options = {});

/// Shorthand for eig_hermitian(a).lambda_min().
double lambda_min(const HermitianMatrix& a);

PsdClass classify_psd(const SpectralDecomposition& eig, double rel_tol = kDefaultRelTol);
PsdClass classify_psd(const HermitianMatrix& a, double rel_tol = kDefaultRelTol);

int rank_numeric(const HermitianMatrix& a, double rel_tol = kDefaultRelTol);

/// Hermitian and idempotent within `tol` (max-entry norm). The rank is the
/// trace rounded to the nearest integer; a trace further than 1e-6 from an
/// integer throws ResidualTooLarge.
ProjectionTest is_orthogonal_projection(const Matrix& p, double tol);

/// M_1 - (1/m_ii) y y*, where M_1 drops row and column `pivot` and y is
/// column `pivot` without its diagonal entry. Throws Degenerate when
/// m_ii <= rel_tol * max(1, max|m_ij|).
HermitianMatrix schur_complement(const HermitianMatrix& m, std::size_t pivot,
                                 double rel_tol = kDefaultRelTol);

}  // namespace schurbound
