#include "schurbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "schurbound/error.hpp"

namespace schurbound {

const char* to_string(Definiteness d) noexcept {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::PositiveSemidefiniteSingular: return "positive_semidefinite_singular";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "unknown";
}

double SpectralDecomposition::spectral_radius() const {
  double r = 0.0;
  for (double v : eigenvalues) r = std::max(r, std::abs(v));
  return r;
}

int SpectralDecomposition::numeric_rank(double rel_tol) const {
  const double tau = scaled_threshold(rel_tol, spectral_radius());
  return static_cast<int>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(),
                    [tau](double v) { return std::abs(v) > tau; }));
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << "hadamard: shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
        << b.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.data()[k] * b.data()[k];
  return c;
}

HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b) {
  return make_hermitian_unchecked(hadamard(a.matrix(), b.matrix()));
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on coordinates (p, q), where phi = arg a(p, q). A <- U* A U, V <- V U.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * phase;
  const Complex uqq = c * phase;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

SpectralDecomposition eig_hermitian(const HermitianMatrix& input, JacobiOptions options) {
  const std::size_t n = input.size();
  Matrix a = input.matrix();
  Matrix v = Matrix::identity(n);

  const double target = options.off_diagonal_rel * a.frobenius_norm();
  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge in " << options.max_sweeps
        << " sweeps (off-diagonal mass " << off_diagonal_norm(a) << ", target " << target << ")";
    throw Error(ErrorKind::NotConverged, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double lambda_min(const HermitianMatrix& a) { return eig_hermitian(a).lambda_min(); }

PsdClass classify_psd(const SpectralDecomposition& eig, double rel_tol) {
  const double lmin = eig.lambda_min();
  const double tau = scaled_threshold(rel_tol, eig.lambda_max());
  if (lmin > tau) return {Definiteness::PositiveDefinite, lmin};
  if (lmin < -tau) return {Definiteness::Indefinite, lmin};
  return {Definiteness::PositiveSemidefiniteSingular, lmin};
}

PsdClass classify_psd(const HermitianMatrix& a, double rel_tol) {
  if (a.size() == 0) throw Error(ErrorKind::InvalidArgument, "classify_psd: empty matrix");
  return classify_psd(eig_hermitian(a), rel_tol);
}

int rank_numeric(const HermitianMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  return eig_hermitian(a).numeric_rank(rel_tol);
}

ProjectionTest is_orthogonal_projection(const Matrix& p, double tol) {
  if (!p.is_square() || p.rows() == 0) return {};
  if (max_abs_diff(p, p.adjoint()) > tol) return {};
  if (max_abs_diff(p * p, p) > tol) return {};
  const double tr = p.trace().real();
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > 1e-6) {
    std::ostringstream msg;
    msg << "projection trace " << tr << " is not within 1e-6 of an integer";
    throw Error(ErrorKind::ResidualTooLarge, msg.str());
  }
  return {true, static_cast<int>(rounded)};
}

HermitianMatrix schur_complement(const HermitianMatrix& m, std::size_t pivot, double rel_tol) {
  const std::size_t n = m.size();
  if (pivot >= n) throw Error(ErrorKind::InvalidArgument, "schur_complement: pivot out of range");
  const double mii = m.diag(pivot);
  const double tau = scaled_threshold(rel_tol, m.matrix().max_abs());
  if (mii <= tau) {
    std::ostringstream msg;
    msg << "schur_complement: pivot m(" << pivot << "," << pivot << ") = " << mii
        << " is not positive";
    throw Error(ErrorKind::Degenerate, msg.str());
  }
  Matrix s(n - 1, n - 1);
  for (std::size_t i = 0, si = 0; i < n; ++i) {
    if (i == pivot) continue;
    for (std::size_t j = 0, sj = 0; j < n; ++j) {
      if (j == pivot) continue;
      s(si, sj) = m(i, j) - m(i, pivot) * m(pivot, j) / mii;
      ++sj;
    }
    ++si;
  }
  return make_hermitian_unchecked(std::move(s));
}

}  // namespace schurbound
