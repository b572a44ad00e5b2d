#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace schurbound {

using Complex = std::complex<double>;

/// Default relative tolerance for rank and definiteness decisions.
inline constexpr double kDefaultRelTol = 1e-9;
/// Default relative tolerance for the Hermitian symmetry check.
inline constexpr double kDefaultSymmetryTol = 1e-12;
/// Default cap on the number of subsets a single enumeration may visit.
inline constexpr std::uint64_t kDefaultSubsetBudget = 2'000'000;

/// Relative threshold with an absolute floor: rel * max(1, scale).
inline double scaled_threshold(double rel, double scale) {
  return rel * (scale > 1.0 ? scale : 1.0);
}

struct Settings {
  double rel_tol = kDefaultRelTol;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
};

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix from_real_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix diagonal(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Matrix transpose() const;
  /// Columns listed in `cols`, in that order.
  Matrix select_columns(std::span<const std::size_t> cols) const;

  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  Complex trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(Complex s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex s, Matrix m);

/// max_ij |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Rank-one product x y* of two column vectors.
Matrix outer(std::span<const Complex> x, std::span<const Complex> y);

/// A* A.
Matrix gram(const Matrix& a);

/// Square complex matrix that is Hermitian within tolerance.
///
/// Construction validates |a_ij - conj(a_ji)| <= tol * max(1, max|a_ij|) and
/// then stores the exact Hermitian part, so every downstream product is
/// conjugate-symmetric bit for bit.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Matrix m, double symmetry_tol = kDefaultSymmetryTol);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix from_real_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return m_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double diag(std::size_t i) const { return m_(i, i).real(); }
  double min_diag() const;
  const Matrix& matrix() const noexcept { return m_; }

  /// I o A: the diagonal part.
  HermitianMatrix diagonal_part() const;
  /// A + s I for real s.
  HermitianMatrix shifted(double s) const;
  HermitianMatrix scaled(double s) const;
  HermitianMatrix operator-(const HermitianMatrix& rhs) const;
  HermitianMatrix operator+(const HermitianMatrix& rhs) const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  struct Trusted {};
  HermitianMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  friend HermitianMatrix make_hermitian_unchecked(Matrix m);

  Matrix m_;
};

/// Wraps a matrix that is Hermitian by construction, replacing each pair
/// (a_ij, a_ji) with its exact Hermitian average without validation.
HermitianMatrix make_hermitian_unchecked(Matrix m);

}  // namespace schurbound
