#include "schurbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schurbound/error.hpp"

namespace schurbound {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::NotHermitian: return "not_hermitian";
    case ErrorKind::NotConverged: return "not_converged";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotPositiveSemidefinite: return "not_positive_semidefinite";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::NotProjection: return "not_projection";
    case ErrorKind::ResidualTooLarge: return "residual_too_large";
  }
  return "unknown";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
        << b.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "from_rows: ragged rows");
    std::copy(row.begin(), row.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
    ++i;
  }
  return m;
}

Matrix Matrix::from_real_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "from_real_rows: ragged rows");
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix t = *this;
  for (auto& v : t.data_) v = std::conj(v);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix s(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw Error(ErrorKind::InvalidArgument, "select_columns: index out of range");
    for (std::size_t i = 0; i < rows_; ++i) s(i, k) = (*this)(i, cols[k]);
  }
  return s;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Complex Matrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "trace: matrix is not square");
  Complex t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    std::ostringstream msg;
    msg << "operator*: inner dimensions " << lhs.cols() << " and " << rhs.rows();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

Matrix outer(std::span<const Complex> x, std::span<const Complex> y) {
  Matrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

Matrix gram(const Matrix& a) {
  Matrix g(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < a.cols(); ++i) g(i, i) = g(i, i).real();
  return g;
}

// --- HermitianMatrix --------------------------------------------------------

HermitianMatrix make_hermitian_unchecked(Matrix m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  return HermitianMatrix(std::move(m), HermitianMatrix::Trusted{});
}

HermitianMatrix::HermitianMatrix(Matrix m, double symmetry_tol) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << "Hermitian matrix must be square, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  const double tol = scaled_threshold(symmetry_tol, m.max_abs());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double defect = std::abs(m(i, j) - std::conj(m(j, i)));
      if (defect > tol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: |a(" << i << "," << j << ") - conj(a(" << j << ","
            << i << "))| = " << defect << " exceeds " << tol;
        throw Error(ErrorKind::NotHermitian, msg.str());
      }
    }
  m_ = make_hermitian_unchecked(std::move(m)).m_;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(Matrix::identity(n), Trusted{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  return HermitianMatrix(Matrix(n, n), Trusted{});
}

HermitianMatrix HermitianMatrix::from_real_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  return HermitianMatrix(Matrix::from_real_rows(rows));
}

double HermitianMatrix::min_diag() const {
  if (size() == 0) throw Error(ErrorKind::InvalidArgument, "min_diag of an empty matrix");
  double m = diag(0);
  for (std::size_t i = 1; i < size(); ++i) m = std::min(m, diag(i));
  return m;
}

HermitianMatrix HermitianMatrix::diagonal_part() const {
  Matrix d(size(), size());
  for (std::size_t i = 0; i < size(); ++i) d(i, i) = m_(i, i);
  return HermitianMatrix(std::move(d), Trusted{});
}

HermitianMatrix HermitianMatrix::shifted(double s) const {
  Matrix d = m_;
  for (std::size_t i = 0; i < size(); ++i) d(i, i) += s;
  return HermitianMatrix(std::move(d), Trusted{});
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
  return HermitianMatrix(Complex(s) * m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& rhs) const {
  return HermitianMatrix(m_ - rhs.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& rhs) const {
  return HermitianMatrix(m_ + rhs.m_, Trusted{});
}

}  // namespace schurbound
