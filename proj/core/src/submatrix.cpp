#include "schurbound/submatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "schurbound/error.hpp"
#include "schurbound/spectral.hpp"

namespace schurbound {

std::uint64_t binomial(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  m = std::min(m, n - m);
  std::uint64_t c = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    // c * (n - m + k) / k is exact at every step; guard the multiplication.
    const std::uint64_t factor = n - m + k;
    if (c > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    c = c * factor / k;
  }
  return c;
}

SubsetIterator::SubsetIterator(std::size_t n, std::size_t m)
    : n_(n), current_(m), done_(m > n) {
  std::iota(current_.begin(), current_.end(), std::size_t{0});
}

void SubsetIterator::next() {
  if (done_) return;
  const std::size_t m = current_.size();
  std::size_t k = m;
  while (k > 0 && current_[k - 1] == n_ - m + k - 1) --k;
  if (k == 0) {
    done_ = true;
    return;
  }
  ++current_[k - 1];
  for (std::size_t j = k; j < m; ++j) current_[j] = current_[j - 1] + 1;
}

void check_subset_budget(std::size_t n, std::size_t m, std::uint64_t budget) {
  const std::uint64_t count = binomial(n, m);
  if (count > budget) {
    std::ostringstream msg;
    msg << "C(" << n << "," << m << ") = " << count << " subsets exceeds the enumeration budget "
        << budget;
    throw Error(ErrorKind::BudgetExceeded, msg.str());
  }
}

HermitianMatrix principal_submatrix(const HermitianMatrix& a, std::span<const std::size_t> subset) {
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= a.size())
      throw Error(ErrorKind::InvalidArgument, "principal_submatrix: index out of range");
    if (k > 0 && subset[k] <= subset[k - 1])
      throw Error(ErrorKind::InvalidArgument,
                  "principal_submatrix: indices must be strictly increasing");
  }
  Matrix s(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) s(i, j) = a(subset[i], subset[j]);
  return make_hermitian_unchecked(std::move(s));
}

MuResult mu(const HermitianMatrix& a, std::size_t m, std::uint64_t budget) {
  const std::size_t n = a.size();
  if (m < 1 || m > n) {
    std::ostringstream msg;
    msg << "mu: order m = " << m << " must lie in [1, " << n << "]";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  check_subset_budget(n, m, budget);

  MuResult best;
  best.m = m;
  best.value = std::numeric_limits<double>::infinity();
  for (SubsetIterator it(n, m); !it.done(); it.next()) {
    const double v = lambda_min(principal_submatrix(a, it.current()));
    if (v < best.value) {
      best.value = v;
      best.argmin_subset.assign(it.current().begin(), it.current().end());
    }
  }
  return best;
}

namespace {

template <typename IsIndependent>
int kruskal_search(std::size_t ncols, std::uint64_t budget, IsIndependent&& independent) {
  for (std::size_t q = 1; q <= ncols; ++q) {
    check_subset_budget(ncols, q, budget);
    for (SubsetIterator it(ncols, q); !it.done(); it.next()) {
      if (!independent(it.current())) return static_cast<int>(q - 1);
    }
  }
  return static_cast<int>(ncols);
}

}  // namespace

int kruskal_rank_columns(const Matrix& a, double rel_tol, std::uint64_t budget) {
  return kruskal_search(a.cols(), budget, [&](std::span<const std::size_t> s) {
    const HermitianMatrix g = make_hermitian_unchecked(gram(a.select_columns(s)));
    return classify_psd(g, rel_tol).is_pd();
  });
}

int kruskal_rank_principal(const HermitianMatrix& a, double rel_tol, std::uint64_t budget) {
  return kruskal_search(a.size(), budget, [&](std::span<const std::size_t> s) {
    return classify_psd(principal_submatrix(a, s), rel_tol).is_pd();
  });
}

int kruskal_rank(const HermitianMatrix& a, double rel_tol, std::uint64_t budget) {
  if (a.size() > 0 && classify_psd(a, rel_tol).is_psd())
    return kruskal_rank_principal(a, rel_tol, budget);
  return kruskal_rank_columns(a.matrix(), rel_tol, budget);
}

int kruskal_rank(const Matrix& a, double rel_tol, std::uint64_t budget) {
  if (a.is_square() && a.rows() > 0) {
    try {
      return kruskal_rank(HermitianMatrix(a), rel_tol, budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotHermitian) throw;
    }
  }
  return kruskal_rank_columns(a, rel_tol, budget);
}

double kappa_eff(const HermitianMatrix& b, double rel_tol) {
  if (b.size() == 0) throw Error(ErrorKind::Degenerate, "kappa_eff: empty matrix");
  const SpectralDecomposition eig = eig_hermitian(b);
  const int r = eig.numeric_rank(rel_tol);
  if (r == 0) throw Error(ErrorKind::Degenerate, "kappa_eff: matrix is numerically zero");
  const double smallest_positive = eig.eigenvalues[static_cast<std::size_t>(r - 1)];
  if (smallest_positive <= 0.0)
    throw Error(ErrorKind::NotPositiveSemidefinite,
                "kappa_eff: matrix has a negative eigenvalue above the rank threshold");
  return eig.lambda_max() / smallest_positive;
}

double tilde_sigma(const Matrix& v, std::size_t m, std::uint64_t budget) {
  const std::size_t k = v.cols();
  if (m < 1 || m > k) {
    std::ostringstream msg;
    msg << "tilde_sigma: order m = " << m << " must lie in [1, " << k << "]";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  check_subset_budget(k, m, budget);
  double best = std::numeric_limits<double>::infinity();
  for (SubsetIterator it(k, m); !it.done(); it.next()) {
    const HermitianMatrix g = make_hermitian_unchecked(gram(v.select_columns(it.current())));
    best = std::min(best, std::sqrt(std::max(0.0, lambda_min(g))));
  }
  return best;
}

}  // namespace schurbound
