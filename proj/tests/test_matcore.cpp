#include <doctest.h>

#include <cmath>

#include "examples.hpp"
#include "oracle.hpp"
#include "schurbound/schurbound.hpp"

using namespace schurbound;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("hadamard of the 3x3 PSD pair") {
  const HermitianMatrix c = hadamard(examples::psd_pair_a(), examples::psd_pair_b());
  CHECK(c == HermitianMatrix::from_real_rows({{4, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(near(lambda_min(c), oracle::lambda_min(c), 1e-12));
}

TEST_CASE("hadamard with identity keeps the diagonal") {
  Rng rng(3);
  const HermitianMatrix a = random_hermitian(rng, 5);
  const HermitianMatrix c = hadamard(a, HermitianMatrix::identity(5));
  CHECK(c == a.diagonal_part());
}

TEST_CASE("hadamard matches an elementwise loop") {
  Rng rng(11);
  const Matrix a = random_gaussian_matrix(rng, 5, 5);
  const Matrix b = random_gaussian_matrix(rng, 5, 5);
  const oracle::CMat expected = oracle::hadamard(oracle::to_eigen(a), oracle::to_eigen(b));
  CHECK((oracle::to_eigen(hadamard(a, b)) - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hadamard dimension mismatch") {
  CHECK_THROWS_AS(hadamard(HermitianMatrix::identity(2), HermitianMatrix::identity(3)), Error);
}

TEST_CASE("eigenvalues of known matrices") {
  const SpectralDecomposition id = eig_hermitian(HermitianMatrix::identity(3));
  for (double v : id.eigenvalues) CHECK(v == 1.0);

  const SpectralDecomposition b = eig_hermitian(examples::psd_pair_b());
  CHECK(near(b.eigenvalues[0], 2 + std::sqrt(2.0), 1e-12));
  CHECK(near(b.eigenvalues[1], 2 - std::sqrt(2.0), 1e-12));
  CHECK(near(b.eigenvalues[2], 0.0, 1e-12));

  const SpectralDecomposition c = eig_hermitian(examples::indefinite_c());
  CHECK(near(c.eigenvalues[0], 8 + std::sqrt(65.0), 1e-12));
  CHECK(near(c.eigenvalues[1], 8.0, 1e-12));
  CHECK(near(c.eigenvalues[2], 8 - std::sqrt(65.0), 1e-12));
}

TEST_CASE("eig handles complex and degenerate input") {
  const HermitianMatrix h(Matrix::from_rows({{{2, 0}, {0, 1}}, {{0, -1}, {2, 0}}}));
  const SpectralDecomposition e = eig_hermitian(h);
  CHECK(near(e.eigenvalues[0], 3.0, 1e-13));
  CHECK(near(e.eigenvalues[1], 1.0, 1e-13));

  const SpectralDecomposition z = eig_hermitian(HermitianMatrix::zero(4));
  for (double v : z.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("eig residuals on 1000 random matrices against Eigen") {
  Rng rng(2024);
  double worst_recon = 0.0, worst_ortho = 0.0, worst_vs_oracle = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 10));
    const HermitianMatrix a = random_hermitian(rng, n);
    const SpectralDecomposition e = eig_hermitian(a);
    std::vector<Complex> lambda(e.eigenvalues.begin(), e.eigenvalues.end());
    const Matrix recon = e.eigenvectors * Matrix::diagonal(lambda) * e.eigenvectors.adjoint();
    const double scale = std::max(1.0, a.matrix().max_abs());
    worst_recon = std::max(worst_recon, max_abs_diff(recon, a.matrix()) / scale);
    worst_ortho = std::max(worst_ortho, max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, Matrix::identity(n)));
    const Eigen::VectorXd ref = oracle::eigenvalues(oracle::to_eigen(a));
    for (std::size_t i = 0; i < n; ++i)
      worst_vs_oracle = std::max(worst_vs_oracle, std::abs(e.eigenvalues[i] - ref(static_cast<Eigen::Index>(n - 1 - i))) / scale);
    REQUIRE(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
  }
  CHECK(worst_recon <= 1e-10);
  CHECK(worst_ortho <= 1e-10);
  CHECK(worst_vs_oracle <= 1e-10);
}

TEST_CASE("eig reports non-convergence") {
  Rng rng(5);
  JacobiOptions opts;
  opts.max_sweeps = 1;
  CHECK_THROWS_AS(eig_hermitian(random_hermitian(rng, 8), opts), Error);
}

TEST_CASE("classify_psd") {
  CHECK(classify_psd(examples::psd_pair_a()).kind == Definiteness::PositiveSemidefiniteSingular);
  CHECK(classify_psd(examples::indefinite_c()).kind == Definiteness::Indefinite);
  CHECK(classify_psd(HermitianMatrix::identity(4)).kind == Definiteness::PositiveDefinite);
  CHECK(near(classify_psd(examples::indefinite_c()).witness, 8 - std::sqrt(65.0), 1e-12));
}

TEST_CASE("rank_numeric") {
  CHECK(rank_numeric(examples::psd_pair_b()) == 2);
  CHECK(rank_numeric(HermitianMatrix::zero(3)) == 0);
  Rng rng(8);
  for (std::size_t k = 1; k < 6; ++k) {
    const Matrix v = random_gaussian_matrix(rng, 6, k);
    CHECK(rank_numeric(make_hermitian_unchecked(v * v.adjoint())) == static_cast<int>(k));
  }
}

TEST_CASE("PD classification implies full rank") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
    const HermitianMatrix a = random_psd(rng, n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n))));
    if (classify_psd(a).is_pd()) CHECK(rank_numeric(a) == static_cast<int>(n));
  }
}

TEST_CASE("Schur product theorem on random PSD pairs") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const HermitianMatrix a = random_psd(rng, n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n))));
    const HermitianMatrix b = random_psd(rng, n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n))));
    const HermitianMatrix c = hadamard(a, b);
    const Eigen::VectorXd ev = oracle::eigenvalues(oracle::to_eigen(c));
    CHECK(ev(0) >= -kDefaultRelTol * std::max(1.0, ev(ev.size() - 1)));
  }
}

TEST_CASE("orthogonal projection test") {
  const ProjectionTest p = is_orthogonal_projection(examples::projection_p(), 1e-12);
  CHECK(p.is_projection);
  CHECK(p.rank == 2);
  const ProjectionTest id = is_orthogonal_projection(Matrix::identity(5), 1e-12);
  CHECK(id.is_projection);
  CHECK(id.rank == 5);
  CHECK_FALSE(is_orthogonal_projection(examples::psd_pair_b().matrix(), 1e-9).is_projection);
  CHECK_FALSE(is_orthogonal_projection(Matrix::from_real_rows({{1, 1}, {0, 0}}), 1e-9).is_projection);
}

TEST_CASE("projection eigenvalues lie in {0,1}") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const std::size_t r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
    const HermitianMatrix p = random_projection(rng, n, r);
    REQUIRE(is_orthogonal_projection(p.matrix(), 1e-10).is_projection);
    for (double v : oracle::eigenvalues(oracle::to_eigen(p))) CHECK(std::min(std::abs(v), std::abs(v - 1)) <= 1e-10);
  }
}

TEST_CASE("schur complement") {
  const HermitianMatrix d = HermitianMatrix::from_real_rows({{3, 0, 0}, {0, 5, 0}, {0, 0, 7}});
  CHECK(schur_complement(d, 1) == HermitianMatrix::from_real_rows({{3, 0}, {0, 7}}));

  const HermitianMatrix s = schur_complement(HermitianMatrix::from_real_rows({{2, 1}, {1, 1}}), 1);
  REQUIRE(s.size() == 1);
  CHECK(near(s(0, 0).real(), 1.0, 1e-15));

  CHECK_THROWS_AS(schur_complement(HermitianMatrix::from_real_rows({{1, 0}, {0, 0}}), 1), Error);

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const HermitianMatrix pd = random_psd(rng, 4, 4);
    const std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, 3));
    CHECK(oracle::lambda_min(schur_complement(pd, i)) > 0.0);
  }
}

TEST_CASE("schur complement of PSD at a positive pivot stays PSD") {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 7));
    const HermitianMatrix a = random_psd(rng, n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n))));
    const HermitianMatrix s = schur_complement(a, 0);
    const Eigen::VectorXd ev = oracle::eigenvalues(oracle::to_eigen(s));
    CHECK(ev(0) >= -kDefaultRelTol * std::max(1.0, ev(ev.size() - 1)));
  }
}

TEST_CASE("Hermitian validation") {
  CHECK_THROWS_AS(HermitianMatrix(Matrix::from_real_rows({{1, 2}, {3, 4}})), Error);
  CHECK_THROWS_AS(HermitianMatrix(Matrix::from_real_rows({{1, 2, 3}})), Error);
  CHECK_NOTHROW(HermitianMatrix(Matrix::from_real_rows({{1, 2}, {2 + 1e-14, 4}})));
}
