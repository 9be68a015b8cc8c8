#include <gtest/gtest.h>

#include "clifford/gamma.hpp"
#include "clifford/kernels.hpp"

namespace {

using namespace clifford;

TEST(BrauerWeyl, SatisfiesRelationsForAllSmallSignatures) {
  for (int n = 2; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      const AlgebraSignature sig(p, n - p);
      const GammaBasis b = brauer_weyl_basis(sig);
      EXPECT_EQ(b.dim(), std::size_t{1} << (n / 2));
      EXPECT_TRUE(clifford_relation_defects(sig, b.gammas()).empty());
    }
  EXPECT_THROW(brauer_weyl_basis(AlgebraSignature(1, 0)), std::invalid_argument);
}

TEST(BrauerWeyl, HermitianGeneratorsSquareToOne) {
  const auto g = brauer_weyl_hermitian(5);
  ASSERT_EQ(g.size(), 5u);
  for (const auto& m : g) {
    EXPECT_TRUE(m.is_hermitian());
    EXPECT_EQ(m * m, GaussianMatrix::identity(4));
  }
}

TEST(BrauerWeyl, FourOneReproducesSpinbasis) {
  const GammaBasis bw = brauer_weyl_basis(AlgebraSignature(4, 1));
  const GammaBasis ss = fixture_basis("sitter");
  ASSERT_EQ(bw.gammas().size(), 5u);
  for (int g = 1; g <= 5; ++g) EXPECT_EQ(bw.gamma(g), ss.gamma(g)) << g;
  EXPECT_EQ(bw.gamma(1), kron(pauli(1), pauli(0)));
  EXPECT_EQ(bw.gamma(5), kron(pauli(3), pauli(3)) * Gaussian::i());
}

TEST(BrauerWeyl, TwoZeroIsPauliPair) {
  const GammaBasis b = brauer_weyl_basis(AlgebraSignature(2, 0));
  EXPECT_EQ(b.gamma(1), pauli(1));
  EXPECT_EQ(b.gamma(2), pauli(2));
}

TEST(Fixtures, AllSatisfyTheirRelations) {
  for (const auto& name : fixture_names()) {
    const GammaBasis b = fixture_basis(name);
    EXPECT_TRUE(clifford_relation_defects(b.signature(), b.gammas()).empty()) << name;
  }
  EXPECT_THROW(fixture_basis("nope"), std::invalid_argument);
}

TEST(Fixtures, Signatures) {
  EXPECT_EQ(fixture_basis("canonical").signature(), AlgebraSignature(1, 3));
  EXPECT_EQ(fixture_basis("weyl").signature(), AlgebraSignature(1, 3));
  EXPECT_EQ(fixture_basis("majorana").signature(), AlgebraSignature(1, 3));
  EXPECT_EQ(fixture_basis("majorana31").signature(), AlgebraSignature(3, 1));
  EXPECT_EQ(fixture_basis("sitter").signature(), AlgebraSignature(4, 1));
  EXPECT_EQ(fixture_basis("canonical").first_label(), 0);
}

TEST(GammaBasis, RejectsBrokenRelations) {
  const AlgebraSignature sig(2, 0);
  EXPECT_THROW(GammaBasis("bad", sig, {pauli(1), pauli(1)}), std::invalid_argument);
  EXPECT_THROW(GammaBasis("bad", sig, {pauli(1)}), std::invalid_argument);
  EXPECT_THROW(GammaBasis("bad", AlgebraSignature(0, 2), {pauli(1), pauli(2)}), std::invalid_argument);
  EXPECT_FALSE(clifford_relation_defects(sig, {pauli(1), pauli(1)}).empty());
}

TEST(GammaBasis, Labels) {
  const GammaBasis c = fixture_basis("canonical");
  EXPECT_EQ(gamma_label(c, SignedBlade::unit()), "I");
  EXPECT_EQ(gamma_label(c, SignedBlade::from_indices({2, 4})), "g13");
  EXPECT_EQ(gamma_label(c, -SignedBlade::from_indices({1, 2, 3, 4})), "-g0123");
  const GammaBasis s = fixture_basis("sitter");
  EXPECT_EQ(gamma_label(s, SignedBlade::from_indices({5}, Phase::i())), "i*g5");
}

TEST(RepOfBlade, HomomorphismOnG41) {
  const GammaBasis b = brauer_weyl_basis(AlgebraSignature(4, 1));
  EXPECT_EQ(kernels::homomorphism_violations_serial(b), 0u);
  EXPECT_EQ(kernels::homomorphism_violations_parallel(b), 0u);
}

TEST(RepOfBlade, HomomorphismOnFixtures) {
  for (const auto& name : fixture_names()) EXPECT_EQ(kernels::homomorphism_violations_serial(fixture_basis(name)), 0u);
}

TEST(RepOfBlade, IdentifyBladeInvertsRep) {
  const GammaBasis b = fixture_basis("sitter");
  for (BladeMask s = 0; s < 32; ++s) {
    const SignedBlade x{Phase::minus_one(), s};
    const auto back = identify_blade(b, rep_of_blade(b, x));
    ASSERT_TRUE(back);
    EXPECT_EQ(rep_of_blade(b, *back), rep_of_blade(b, x));
  }
  EXPECT_FALSE(identify_blade(b, GaussianMatrix::identity(4) * Gaussian(2)));
  EXPECT_THROW(rep_of_blade(b, SignedBlade::from_indices({6})), std::out_of_range);
}

TEST(Intertwiner, ConstructedBetweenEquivalentBases) {
  const GammaBasis c = fixture_basis("canonical"), w = fixture_basis("weyl"), m = fixture_basis("majorana");
  for (const auto* pair : {&w, &m}) {
    const auto a = construct_intertwiner(c, *pair);
    ASSERT_TRUE(a);
    EXPECT_TRUE(verify_intertwiner(*a, c, *pair));
  }
  EXPECT_THROW(verify_intertwiner(GaussianMatrix::identity(4), c, fixture_basis("majorana31")), std::invalid_argument);
  EXPECT_THROW(verify_intertwiner(GaussianMatrix(4), c, w), std::domain_error);
}

TEST(Intertwiner, XHoldsOnlyInReverseDirection) {
  const GammaBasis c = fixture_basis("canonical"), w = fixture_basis("weyl");
  const GaussianMatrix x = intertwiner_x();
  EXPECT_FALSE(verify_intertwiner(x, c, w));
  EXPECT_EQ(intertwiner_defects(x, c, w), std::vector<int>{1});  // fails on g0 only
  EXPECT_TRUE(verify_intertwiner(x, w, c));
}

TEST(Intertwiner, NoEpsilonMakesYWork) {
  const EpsilonScan scan = scan_y_epsilon();
  EXPECT_TRUE(scan.valid.empty());
  EXPECT_NE(scan.note.find("no valid epsilon"), std::string::npos);
  EXPECT_THROW(intertwiner_y(0), std::invalid_argument);
}

}  // namespace
