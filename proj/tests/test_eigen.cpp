#include <doctest.h>

#include <cmath>

#include "unc/error.hpp"
#include "unc/hermitian_eigen.hpp"
#include "unc/quantum.hpp"
#include "unc/verify.hpp"

using namespace unc;

TEST_CASE("2x2 real symmetric") {
  CMatrix a(2);
  a(0, 0) = 0.75;
  a(0, 1) = 0.25;
  a(1, 0) = 0.25;
  a(1, 1) = 0.25;
  const auto s = eigen_hermitian(a);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.853553390593274).epsilon(1e-13));
  CHECK(s.eigenvalues[1] == doctest::Approx(0.146446609406726).epsilon(1e-13));
  CHECK(reconstruction_error(a, s) < 1e-14);
}

TEST_CASE("complex Hermitian with known spectrum") {
  // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
  CMatrix a(2);
  a(0, 0) = 2.0;
  a(0, 1) = Complex(0.0, 1.0);
  a(1, 0) = Complex(0.0, -1.0);
  a(1, 1) = 2.0;
  const auto s = eigen_hermitian(a);
  CHECK(s.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(reconstruction_error(a, s) < 1e-14);
}

TEST_CASE("identity, diagonal and rank one") {
  const auto mixed = eigen_hermitian(CMatrix::identity(5) * Complex(0.2));
  for (double l : mixed.eigenvalues) CHECK(l == doctest::Approx(0.2));
  const double diag[] = {0.1, 0.6, 0.3};
  const auto d = eigen_hermitian(CMatrix::diagonal(diag));
  CHECK(d.eigenvalues == std::vector<double>{0.6, 0.3, 0.1});
  CHECK(d.sweeps == 0);

  const Complex psi[] = {Complex(1, 1), Complex(0, 2), Complex(-1, 0.5), Complex(0.3, 0)};
  const auto rho = pure_state(psi);
  const auto& s = eigen_hermitian(rho);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(s.eigenvalues[k]) < 1e-14);
}

TEST_CASE("eigenvector matrix is unitary and reconstructs the input") {
  for (std::size_t d : {2u, 5u, 9u, 16u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto rho = random_density_matrix(d, d, seed);
      const auto s = eigen_hermitian(rho.matrix());
      CHECK(reconstruction_error(rho.matrix(), s) <= 1e-9);
      CHECK((s.eigenvectors.adjoint() * s.eigenvectors - CMatrix::identity(d)).max_abs() <= 1e-10);
      for (std::size_t k = 1; k < d; ++k) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    }
  }
}

TEST_CASE("analytic eigenvalues agree with Jacobi") {
  for (std::size_t d : {2u, 3u}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto rho = random_density_matrix(d, 1 + seed % d, seed);
      const auto exact = verify::analytic_eigenvalues(rho.matrix());
      const auto& s = eigen_hermitian(rho);
      for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(exact[k] - s.eigenvalues[k]) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(verify::analytic_eigenvalues(CMatrix::identity(4)), Error);
}

TEST_CASE("non-Hermitian input is rejected") {
  CMatrix a(2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(eigen_hermitian(a), Error);
}

TEST_CASE("spectral_function applies f to eigenvalues") {
  const double diag[] = {0.9, 0.1};
  const auto root = matrix_sqrt(diagonal_state(make_distribution({0.9, 0.1})));
  CHECK(root(0, 0).real() == doctest::Approx(0.948683298050514).epsilon(1e-13));
  CHECK(root(1, 1).real() == doctest::Approx(0.316227766016838).epsilon(1e-13));
  CHECK(std::abs(root(0, 1)) < 1e-15);
  const auto sq = spectral_function(eigen_hermitian(CMatrix::diagonal(diag)), [](double x) { return x * x; });
  CHECK(sq(0, 0).real() == doctest::Approx(0.81));
}
