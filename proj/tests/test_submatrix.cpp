#include <doctest.h>

#include <cmath>
#include <set>

#include "examples.hpp"
#include "oracle.hpp"
#include "schurbound/schurbound.hpp"

using namespace schurbound;

TEST_CASE("subset iterator is lexicographic and complete") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      std::set<std::vector<std::size_t>> seen;
      std::vector<std::size_t> prev;
      for (SubsetIterator it(n, m); !it.done(); it.next()) {
        std::vector<std::size_t> cur(it.current().begin(), it.current().end());
        CHECK(std::is_sorted(cur.begin(), cur.end()));
        if (!prev.empty()) CHECK(prev < cur);
        CHECK(seen.insert(cur).second);
        prev = cur;
      }
      CHECK(seen.size() == binomial(n, m));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("principal submatrix") {
  const HermitianMatrix a = examples::psd_pair_a();
  const std::vector<std::size_t> s01 = {0, 1};
  CHECK(principal_submatrix(a, s01) == HermitianMatrix::from_real_rows({{2, 1}, {1, 1}}));
  const std::vector<std::size_t> all = {0, 1, 2};
  CHECK(principal_submatrix(a, all) == a);
  Rng rng(1);
  const HermitianMatrix r = random_hermitian(rng, 5);
  const std::vector<std::size_t> single = {3};
  CHECK(principal_submatrix(r, single)(0, 0) == r(3, 3));
  const std::vector<std::size_t> bad = {1, 0};
  CHECK_THROWS_AS(principal_submatrix(a, bad), Error);
}

TEST_CASE("mu of the 3x3 example") {
  const MuResult r = mu(examples::psd_pair_a(), 2);
  CHECK(std::abs(r.value - (3 - std::sqrt(5.0)) / 2) <= 1e-9);
  CHECK(std::abs(r.value - 0.382) <= 1e-3);
  CHECK(r.argmin_subset == std::vector<std::size_t>{0, 1});
  CHECK(std::abs(mu(examples::psd_pair_a(), 3).value) <= 1e-12);
}

TEST_CASE("mu reductions are exact") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
    const HermitianMatrix a = random_hermitian(rng, n);
    CHECK(mu(a, 1).value == a.min_diag());
    CHECK(mu(a, n).value == lambda_min(a));
  }
}

TEST_CASE("mu interlacing and agreement with bitmask enumeration") {
  Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const HermitianMatrix a = random_hermitian(rng, n);
    const oracle::CMat e = oracle::to_eigen(a);
    const double scale = std::max(1.0, a.matrix().max_abs());
    double prev = mu(a, 1).value;
    for (std::size_t m = 1; m <= n; ++m) {
      const double cur = mu(a, m).value;
      CHECK(cur <= prev + 1e-12 * scale);
      CHECK(std::abs(cur - oracle::mu(e, static_cast<int>(m))) <= 1e-10 * scale);
      prev = cur;
    }
  }
}

TEST_CASE("mu budget and argument errors") {
  CHECK_THROWS_AS(mu(HermitianMatrix::identity(30), 15), Error);
  CHECK_THROWS_AS(mu(HermitianMatrix::identity(3), 0), Error);
  CHECK_THROWS_AS(mu(HermitianMatrix::identity(3), 4), Error);
  try {
    mu(HermitianMatrix::identity(30), 15);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_NOTHROW(mu(HermitianMatrix::identity(8), 4, 70));
  CHECK_THROWS_AS(mu(HermitianMatrix::identity(8), 4, 69), Error);
}

TEST_CASE("kruskal ranks of the 3x3 example") {
  const HermitianMatrix a = examples::psd_pair_a();
  const HermitianMatrix b = examples::psd_pair_b();
  CHECK(kruskal_rank(a) == 2);
  CHECK(kruskal_rank(b) == 1);
  CHECK(kruskal_rank(hadamard(a, b)) == 3);
  CHECK(rank_numeric(a) == 2);
  CHECK(rank_numeric(b) == 2);
  CHECK(rank_numeric(hadamard(a, b)) == 3);
}

TEST_CASE("kruskal rank edge cases") {
  CHECK(kruskal_rank(HermitianMatrix::identity(5)) == 5);
  CHECK(kruskal_rank(Matrix::from_real_rows({{1, 0, 2}, {3, 0, 4}})) == 0);
  CHECK(kruskal_rank(Matrix::from_real_rows({{1, 2}, {1, 2}})) == 1);
  CHECK(kruskal_rank(HermitianMatrix::zero(3)) == 0);
  // Two equal columns give Kruskal rank 1 even though the rank is 2.
  CHECK(kruskal_rank(Matrix::from_real_rows({{1, 1, 0}, {0, 0, 1}})) == 1);
}

TEST_CASE("kruskal rank paths agree with SVD brute force") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
    const HermitianMatrix a = k == 0 ? random_psd(rng, n, 1) : random_psd_with_kruskal_rank(rng, n, k);
    const int expected = oracle::kruskal_rank_columns(oracle::to_eigen(a));
    CHECK(kruskal_rank_principal(a) == expected);
    CHECK(kruskal_rank_columns(a.matrix()) == expected);
    CHECK(kruskal_rank(a) <= rank_numeric(a));
  }
}

TEST_CASE("kappa_eff") {
  CHECK(std::abs(kappa_eff(examples::psd_pair_b()) - (3 + 2 * std::sqrt(2.0))) <= 1e-9);
  CHECK(std::abs(kappa_eff(examples::psd_pair_b()) - 5.828) <= 1e-3);
  CHECK(std::abs(kappa_eff(HermitianMatrix(examples::projection_p())) - 1.0) <= 1e-12);
  CHECK(kappa_eff(HermitianMatrix::from_real_rows({{4, 0, 0}, {0, 2, 0}, {0, 0, 1}})) == doctest::Approx(4.0));
  CHECK_THROWS_AS(kappa_eff(HermitianMatrix::zero(3)), Error);
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    CHECK(std::abs(kappa_eff(random_projection(rng, n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n))))) - 1.0) <= 1e-10);
  }
}

TEST_CASE("tilde_sigma") {
  Rng rng(37);
  const Matrix v = random_gaussian_matrix(rng, 4, 3);
  const oracle::CMat e = oracle::to_eigen(v);
  const Eigen::VectorXd s = oracle::singular_values(e);
  CHECK(std::abs(tilde_sigma(v, 3) - s(2)) <= 1e-10);
  CHECK(std::abs(tilde_sigma(v, 2) - oracle::tilde_sigma(e, 2)) <= 1e-10);
  CHECK(std::abs(tilde_sigma(v, 1) - oracle::tilde_sigma(e, 1)) <= 1e-10);

  const Matrix steering = build_steering(5, {-1.0, 0.2, 2.5});
  CHECK(std::abs(tilde_sigma(steering, 1) - std::sqrt(5.0)) <= 1e-12);

  // More columns than rows: any 3-column block of a 2-row matrix is singular.
  CHECK(tilde_sigma(build_steering(2, {-1.0, 0.2, 2.5}), 3) <= 1e-7);
  CHECK_THROWS_AS(tilde_sigma(v, 0), Error);
  CHECK_THROWS_AS(tilde_sigma(v, 4), Error);
}
