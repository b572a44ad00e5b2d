#include "schurbound/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schurbound/error.hpp"
#include "schurbound/spectral.hpp"

namespace schurbound {

namespace {

void require_same_size(const HermitianMatrix& a, const HermitianMatrix& b, const char* op) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << op << ": dimensions " << a.size() << " and " << b.size() << " differ";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  if (a.size() == 0) throw Error(ErrorKind::InvalidArgument, std::string(op) + ": empty matrix");
}

void require_psd(const SpectralDecomposition& eig, double rel_tol, const char* op,
                 const char* name) {
  const PsdClass cls = classify_psd(eig, rel_tol);
  if (!cls.is_psd()) {
    std::ostringstream msg;
    msg << op << ": " << name << " is not positive semidefinite (lambda_min = " << cls.witness
        << ")";
    throw Error(ErrorKind::NotPositiveSemidefinite, msg.str());
  }
}

/// lambda_min(M) >= -rel * max(1, |lambda|_max).
bool psd_within(const SpectralDecomposition& eig, double rel_tol) {
  return eig.lambda_min() >= -scaled_threshold(rel_tol, eig.spectral_radius());
}

std::vector<Complex> column_above_corner(const Matrix& p) {
  const std::size_t n = p.rows();
  std::vector<Complex> x(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) x[i] = p(i, n - 1);
  return x;
}

double vector_norm_sq(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return s;
}

double idempotency_defect(const Matrix& m) { return max_abs_diff(m * m, m); }

}  // namespace

double ProjectionResiduals::max() const {
  return std::max({norm_identity, q_idempotency, q_annihilates_x, q_trace, r_idempotency, r_trace,
                   p1_idempotency, p1_trace});
}

double classical_bound(const HermitianMatrix& a, const HermitianMatrix& b, double rel_tol) {
  require_same_size(a, b, "classical_bound");
  const SpectralDecomposition eig_a = eig_hermitian(a);
  require_psd(eig_a, rel_tol, "classical_bound", "A");
  require_psd(eig_hermitian(b), rel_tol, "classical_bound", "B");
  return eig_a.lambda_min() * b.min_diag();
}

bool loewner_check(const HermitianMatrix& m, double c, const HermitianMatrix& d, double rel_tol) {
  require_same_size(m, d, "loewner_check");
  return psd_within(eig_hermitian(m - d.scaled(c)), rel_tol);
}

BoundReport quantitative_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                               const Settings& settings) {
  require_same_size(a, b, "quantitative_bound");
  const SpectralDecomposition eig_a = eig_hermitian(a);
  const SpectralDecomposition eig_b = eig_hermitian(b);
  require_psd(eig_a, settings.rel_tol, "quantitative_bound", "A");
  require_psd(eig_b, settings.rel_tol, "quantitative_bound", "B");

  BoundReport rep;
  rep.n = a.size();
  rep.r_b = eig_b.numeric_rank(settings.rel_tol);
  if (rep.r_b == 0) throw Error(ErrorKind::Degenerate, "quantitative_bound: B is numerically zero");

  rep.mu = mu(a, rep.n - static_cast<std::size_t>(rep.r_b) + 1, settings.subset_budget);
  rep.kappa_eff = eig_b.lambda_max() / eig_b.eigenvalues[static_cast<std::size_t>(rep.r_b - 1)];
  rep.min_diag = b.min_diag();
  rep.lambda_min_a = eig_a.lambda_min();
  rep.classical_bound = rep.lambda_min_a * rep.min_diag;
  rep.quantitative_bound = rep.mu.value * rep.min_diag / rep.kappa_eff;

  const HermitianMatrix product = hadamard(a, b);
  rep.actual_lambda_min = lambda_min(product);
  rep.loewner_verified = loewner_check(product, rep.mu.value / rep.kappa_eff, b.diagonal_part(),
                                       settings.rel_tol);
  rep.margin = rep.actual_lambda_min - rep.quantitative_bound;
  return rep;
}

NonsingularityVerdict nonsingularity_predicate(const HermitianMatrix& a, const HermitianMatrix& b,
                                               const Settings& settings) {
  require_same_size(a, b, "nonsingularity_predicate");
  NonsingularityVerdict v;
  v.n = a.size();
  v.min_diag_b = b.min_diag();
  v.rank_b = rank_numeric(b, settings.rel_tol);
  v.kruskal_rank_a = kruskal_rank(a, settings.rel_tol, settings.subset_budget);

  const double diag_tol = scaled_threshold(settings.rel_tol, b.matrix().max_abs());
  const int needed = static_cast<int>(v.n) - v.rank_b + 1;
  std::ostringstream why;
  v.holds = false;
  if (v.min_diag_b <= diag_tol) {
    why << "B has a zero diagonal entry (min b_ii = " << v.min_diag_b << ")";
  } else if (v.kruskal_rank_a < needed) {
    why << "k_A = " << v.kruskal_rank_a << " < n - r_B + 1 = " << needed << " (n = " << v.n
        << ", r_B = " << v.rank_b << ")";
  } else {
    v.holds = true;
    why << "k_A + r_B = " << v.kruskal_rank_a + v.rank_b << " > n = " << v.n;
  }
  v.explanation = why.str();
  return v;
}

ProjectionParts decompose_projection(const Matrix& pm, double tol) {
  if (!pm.is_square() || pm.rows() < 2)
    throw Error(ErrorKind::InvalidArgument, "decompose_projection: need a square matrix, n >= 2");
  const ProjectionTest test = is_orthogonal_projection(pm, tol);
  if (!test.is_projection)
    throw Error(ErrorKind::NotProjection, "decompose_projection: P is not an orthogonal projection");

  const std::size_t n = pm.rows();
  const HermitianMatrix P = make_hermitian_unchecked(pm);

  ProjectionParts parts;
  parts.rank = test.rank;
  std::vector<std::size_t> leading(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) leading[i] = i;
  parts.p1 = principal_submatrix(P, leading);
  parts.x = column_above_corner(P.matrix());
  parts.p = P.diag(n - 1);

  const double xnorm2 = vector_norm_sq(parts.x);
  ProjectionResiduals& res = parts.residuals;
  res.norm_identity = std::abs(xnorm2 - parts.p * (1.0 - parts.p));

  auto fail = [](const char* what, double value, double bound) {
    std::ostringstream msg;
    msg << "decompose_projection: " << what << " residual " << value << " exceeds " << bound;
    throw Error(ErrorKind::ResidualTooLarge, msg.str());
  };
  if (res.norm_identity > tol) fail("||x||^2 - p(1-p)", res.norm_identity, tol);
  if (parts.p < -tol || parts.p > 1.0 + tol) fail("corner range", std::abs(parts.p - 0.5) - 0.5, tol);

  if (parts.p <= tol || parts.p >= 1.0 - tol) {
    const double corner = parts.p >= 1.0 - tol ? 1.0 : 0.0;
    if (xnorm2 > tol) fail("||x||^2 at extreme corner", xnorm2, tol);
    res.p1_idempotency = idempotency_defect(parts.p1.matrix());
    res.p1_trace = std::abs(parts.p1.matrix().trace().real() - (parts.rank - corner));
    if (res.p1_idempotency > tol) fail("P1 idempotency", res.p1_idempotency, tol);
    if (res.p1_trace > tol) fail("P1 trace", res.p1_trace, tol);
    return parts;
  }

  const Matrix xx = outer(parts.x, parts.x);
  const HermitianMatrix q = make_hermitian_unchecked(parts.p1.matrix() - Complex(1.0 / parts.p) * xx);
  const HermitianMatrix r = make_hermitian_unchecked(q.matrix() + Complex(1.0 / xnorm2) * xx);

  res.q_idempotency = idempotency_defect(q.matrix());
  double qx = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j + 1 < n; ++j) s += q(i, j) * parts.x[j];
    qx = std::max(qx, std::abs(s));
  }
  res.q_annihilates_x = qx;
  res.q_trace = std::abs(q.matrix().trace().real() - (parts.rank - 1));
  res.r_idempotency = idempotency_defect(r.matrix());
  res.r_trace = std::abs(r.matrix().trace().real() - parts.rank);

  if (res.q_idempotency > tol) fail("Q idempotency", res.q_idempotency, tol);
  if (res.q_annihilates_x > tol) fail("Qx", res.q_annihilates_x, tol);
  if (res.q_trace > tol) fail("Q trace", res.q_trace, tol);
  if (res.r_idempotency > tol) fail("R idempotency", res.r_idempotency, tol);
  if (res.r_trace > tol) fail("R trace", res.r_trace, tol);

  parts.q = q;
  parts.r = r;
  return parts;
}

CertificateVerdict projection_certificate(const HermitianMatrix& c, const Matrix& p,
                                          const Settings& settings) {
  if (p.rows() != c.size() || p.cols() != c.size())
    throw Error(ErrorKind::DimensionMismatch, "projection_certificate: C and P differ in size");
  const double proj_tol = scaled_threshold(settings.rel_tol, p.max_abs());
  const ProjectionTest test = is_orthogonal_projection(p, proj_tol);
  if (!test.is_projection)
    throw Error(ErrorKind::NotProjection, "projection_certificate: P is not an orthogonal projection");
  if (test.rank < 1)
    throw Error(ErrorKind::Degenerate, "projection_certificate: P has rank 0");

  CertificateVerdict v;
  v.n = c.size();
  v.r = test.rank;
  const SpectralDecomposition eig_c = eig_hermitian(c);
  v.lambda_min_c = eig_c.lambda_min();
  v.mu = mu(c, v.n - static_cast<std::size_t>(v.r) + 1, settings.subset_budget).value;
  v.hypothesis_threshold = 0.0;
  v.hypothesis_holds = v.mu >= -scaled_threshold(settings.rel_tol, eig_c.spectral_radius());

  const SpectralDecomposition eig_prod =
      eig_hermitian(hadamard(c, make_hermitian_unchecked(p)));
  v.lambda_min_product = eig_prod.lambda_min();
  v.conclusion_holds = psd_within(eig_prod, settings.rel_tol);
  return v;
}

CertificateVerdict indefinite_certificate(const HermitianMatrix& c, const HermitianMatrix& b,
                                          const Settings& settings) {
  require_same_size(c, b, "indefinite_certificate");
  const SpectralDecomposition eig_b = eig_hermitian(b);
  require_psd(eig_b, settings.rel_tol, "indefinite_certificate", "B");

  CertificateVerdict v;
  v.n = c.size();
  v.r = eig_b.numeric_rank(settings.rel_tol);
  if (v.r == 0) throw Error(ErrorKind::Degenerate, "indefinite_certificate: B is numerically zero");
  const double kappa = eig_b.lambda_max() / eig_b.eigenvalues[static_cast<std::size_t>(v.r - 1)];

  const SpectralDecomposition eig_c = eig_hermitian(c);
  v.lambda_min_c = eig_c.lambda_min();
  v.mu = mu(c, v.n - static_cast<std::size_t>(v.r) + 1, settings.subset_budget).value;
  v.hypothesis_threshold = -(kappa - 1.0) * v.lambda_min_c;
  v.hypothesis_holds =
      v.mu >= v.hypothesis_threshold - scaled_threshold(settings.rel_tol, eig_c.spectral_radius());

  const SpectralDecomposition eig_prod = eig_hermitian(hadamard(c, b));
  v.lambda_min_product = eig_prod.lambda_min();
  v.conclusion_holds = psd_within(eig_prod, settings.rel_tol);
  return v;
}

ShiftResult shift_construction(const HermitianMatrix& a, const HermitianMatrix& b, double fraction,
                               const Settings& settings) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "shift_construction: fraction must lie in (0, 1]");
  require_same_size(a, b, "shift_construction");
  require_psd(eig_hermitian(a), settings.rel_tol, "shift_construction", "A");
  const SpectralDecomposition eig_b = eig_hermitian(b);
  require_psd(eig_b, settings.rel_tol, "shift_construction", "B");
  const int r = eig_b.numeric_rank(settings.rel_tol);
  if (r == 0) throw Error(ErrorKind::Degenerate, "shift_construction: B is numerically zero");
  const double kappa = eig_b.lambda_max() / eig_b.eigenvalues[static_cast<std::size_t>(r - 1)];
  const double m = mu(a, a.size() - static_cast<std::size_t>(r) + 1, settings.subset_budget).value;

  ShiftResult out;
  out.max_shift = m / kappa;
  if (out.max_shift <= scaled_threshold(settings.rel_tol, a.matrix().max_abs())) {
    std::ostringstream msg;
    msg << "shift_construction: mu / kappa_eff = " << out.max_shift
        << " is not positive; no admissible shift";
    throw Error(ErrorKind::Degenerate, msg.str());
  }
  out.shift = fraction * out.max_shift;
  out.c = a.shifted(-out.shift);
  return out;
}

}  // namespace schurbound
