#include <gtest/gtest.h>

#include <random>

#include "clifford/gaussian.hpp"

namespace {

using namespace clifford;

GaussianMatrix random_matrix(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  GaussianMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = Gaussian(pick(rng), pick(rng));
  return m;
}

// Laplace expansion, the slow oracle for the Bareiss determinant.
Gaussian laplace(const GaussianMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 1) return m(0, 0);
  Gaussian sum{0};
  for (std::size_t c = 0; c < d; ++c) {
    GaussianMatrix minor(d - 1);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t k = 0, j = 0; k < d; ++k)
        if (k != c) minor(r - 1, j++) = m(r, k);
    const Gaussian term = m(0, c) * laplace(minor);
    sum += c % 2 ? -term : term;
  }
  return sum;
}

TEST(Gaussian, Arithmetic) {
  const Gaussian a{2, 3}, b{1, -1};
  EXPECT_EQ(a * b, Gaussian(5, 1));
  EXPECT_EQ(a.conj(), Gaussian(2, -3));
  EXPECT_EQ(a.norm(), 13);
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
  EXPECT_EQ(exact_divide(a * b, b), a);
  EXPECT_THROW(exact_divide(Gaussian(1), Gaussian(2)), std::domain_error);
  EXPECT_THROW(exact_divide(Gaussian(1), Gaussian(0)), std::domain_error);
}

TEST(Gaussian, Phases) {
  for (int k = 0; k < 4; ++k) EXPECT_EQ(Gaussian::from_phase(Phase(k)).as_phase(), Phase(k));
  EXPECT_FALSE(Gaussian(1, 1).as_phase());
  EXPECT_FALSE(Gaussian(2).as_phase());
}

TEST(GaussianMatrix, PauliAlgebra) {
  const GaussianMatrix id = GaussianMatrix::identity(2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(pauli(k) * pauli(k), id);
    EXPECT_TRUE(pauli(k).is_hermitian());
  }
  EXPECT_EQ(pauli(1) * pauli(2), pauli(3) * Gaussian::i());
  EXPECT_EQ(pauli(1) * pauli(2), -(pauli(2) * pauli(1)));
  EXPECT_EQ(pauli(0), id);
  EXPECT_THROW(pauli(4), std::out_of_range);
}

TEST(GaussianMatrix, KroneckerMixedProduct) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const GaussianMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
    const GaussianMatrix c = random_matrix(2, rng), d = random_matrix(2, rng);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
  EXPECT_EQ(kron(pauli(1), pauli(3)).dim(), 4u);
}

TEST(GaussianMatrix, TransposeConjugate) {
  std::mt19937_64 rng(8);
  const GaussianMatrix a = random_matrix(3, rng), b = random_matrix(3, rng);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
  EXPECT_EQ(a.adjoint().adjoint(), a);
}

TEST(GaussianMatrix, DimensionChecks) {
  EXPECT_THROW(GaussianMatrix::identity(2) * GaussianMatrix::identity(3), std::invalid_argument);
  EXPECT_THROW(GaussianMatrix(2, std::vector<Gaussian>(3)), std::invalid_argument);
  EXPECT_THROW((GaussianMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(GaussianMatrixProperty, BareissMatchesLaplace) {
  std::mt19937_64 rng(9);
  for (std::size_t d = 1; d <= 5; ++d)
    for (int t = 0; t < 25; ++t) {
      const GaussianMatrix m = random_matrix(d, rng);
      ASSERT_EQ(determinant(m), laplace(m));
    }
}

TEST(GaussianMatrixProperty, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 25; ++t) {
    const GaussianMatrix a = random_matrix(4, rng), b = random_matrix(4, rng);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(GaussianMatrix, DeterminantNeedsPivoting) {
  // Zero leading entry.
  const GaussianMatrix m{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(m), Gaussian(-1));
  EXPECT_EQ(determinant(GaussianMatrix{{1, 2}, {2, 4}}), Gaussian(0));
}

TEST(GaussianMatrix, SchurScalarAndProportionality) {
  const GaussianMatrix s = GaussianMatrix::scalar(4, Gaussian(0, -1));
  EXPECT_EQ(schur_scalar(s), Gaussian(0, -1));
  EXPECT_FALSE(schur_scalar(kron(pauli(1), pauli(0))));
  EXPECT_EQ(proportionality(pauli(3) * Gaussian::i(), pauli(3)), Gaussian::i());
  EXPECT_FALSE(proportionality(pauli(1), pauli(3)));
  EXPECT_FALSE(proportionality(pauli(1), GaussianMatrix(2)));
}

}  // namespace
