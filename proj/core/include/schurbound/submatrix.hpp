#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schurbound/matrix.hpp"

namespace schurbound {

/// C(n, m), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t m);

/// Lexicographic enumeration of the size-m subsets of {0, ..., n-1}.
///
///   for (SubsetIterator it(n, m); !it.done(); it.next()) use(it.current());
class SubsetIterator {
 public:
  SubsetIterator(std::size_t n, std::size_t m);

  bool done() const noexcept { return done_; }
  std::span<const std::size_t> current() const noexcept { return current_; }
  void next();

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return current_.size(); }

 private:
  std::size_t n_;
  std::vector<std::size_t> current_;
  bool done_;
};

/// Throws BudgetExceeded when C(n, m) > budget.
void check_subset_budget(std::size_t n, std::size_t m, std::uint64_t budget);

struct MuResult {
  double value = 0.0;
  std::vector<std::size_t> argmin_subset;
  std::size_t m = 0;
};

/// Rows and columns of `a` restricted to `subset` (strictly increasing).
HermitianMatrix principal_submatrix(const HermitianMatrix& a, std::span<const std::size_t> subset);

/// Smallest eigenvalue over all m x m principal submatrices. Ties resolve to
/// the lexicographically first subset.
MuResult mu(const HermitianMatrix& a, std::size_t m,
            std::uint64_t budget = kDefaultSubsetBudget);

/// Kruskal rank from the column definition: the largest q such that every
/// q-column submatrix has full numeric column rank (its Gram matrix is
/// positive definite at rel_tol). A zero column gives 0.
int kruskal_rank_columns(const Matrix& a, double rel_tol = kDefaultRelTol,
                         std::uint64_t budget = kDefaultSubsetBudget);

/// Kruskal rank of a positive semidefinite matrix via principal submatrices:
/// the largest q such that every q x q principal submatrix is positive
/// definite.
int kruskal_rank_principal(const HermitianMatrix& a, double rel_tol = kDefaultRelTol,
                           std::uint64_t budget = kDefaultSubsetBudget);

/// Uses the principal-submatrix path when `a` is Hermitian and positive
/// semidefinite, the column path otherwise.
int kruskal_rank(const Matrix& a, double rel_tol = kDefaultRelTol,
                 std::uint64_t budget = kDefaultSubsetBudget);
int kruskal_rank(const HermitianMatrix& a, double rel_tol = kDefaultRelTol,
                 std::uint64_t budget = kDefaultSubsetBudget);

/// lambda_1(B) / lambda_{r_B}(B): ratio of the largest and smallest positive
/// eigenvalues. Throws Degenerate when B is numerically zero.
double kappa_eff(const HermitianMatrix& b, double rel_tol = kDefaultRelTol);

/// Minimum over all m-column submatrices of `v` of their smallest singular
/// value. Singular values are square roots of Gram eigenvalues, clamped at 0.
double tilde_sigma(const Matrix& v, std::size_t m,
                   std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace schurbound
