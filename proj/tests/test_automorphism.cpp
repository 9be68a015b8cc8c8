#include <gtest/gtest.h>

#include "clifford/automorphism.hpp"
#include "clifford/isomorphism.hpp"

namespace {

using namespace clifford;

std::string label(const GammaBasis& b, const SignedBlade& x) { return gamma_label(b, x.with_phase(Phase::one())); }

TEST(Solvers, TwoZeroReversionIsSigmaOne) {
  const GammaBasis b = brauer_weyl_basis(AlgebraSignature(2, 0));
  const BladeSolution e = solve_transpose_symmetry(b);
  EXPECT_EQ(e.blade, SignedBlade::from_indices({1}));
  EXPECT_EQ(e.matrix, pauli(1));
}

TEST(Solvers, CanonicalCl13) {
  const GammaBasis c = fixture_basis("canonical");
  EXPECT_EQ(label(c, solve_transpose_symmetry(c).blade), "g13");
  EXPECT_EQ(label(c, solve_complex_conjugation(c).blade), "g013");
}

TEST(Solvers, RealBasisHasTrivialPi) {
  const GammaBasis m = fixture_basis("majorana31");
  const BladeSolution pi = solve_complex_conjugation(m);
  EXPECT_EQ(pi.blade, SignedBlade::unit());
  EXPECT_EQ(pi.matrix, GaussianMatrix::identity(4));
}

TEST(Solvers, SolutionsSatisfyTheirRelations) {
  for (const char* name : {"canonical", "weyl", "majorana", "majorana31"}) {
    const GammaBasis b = fixture_basis(name);
    const GaussianMatrix e = solve_transpose_symmetry(b).matrix;
    const GaussianMatrix pi = solve_complex_conjugation(b).matrix;
    for (int g = 1; g <= b.signature().n(); ++g) {
      EXPECT_EQ(e * b.gamma(g).transpose(), b.gamma(g) * e) << name;
      EXPECT_EQ(pi * b.gamma(g).conjugate(), b.gamma(g) * pi) << name;
    }
  }
}

TEST(Solvers, OddNConjugationObstruction) {
  // The volume matrix of this basis is i*I; conjugation cannot be inner.
  const GammaBasis s = fixture_basis("sitter");
  EXPECT_THROW(solve_complex_conjugation(s), SolverError);
  EXPECT_THROW(derive_ext_group(s), SolverError);
  EXPECT_EQ(label(s, solve_transpose_symmetry(s).blade), "g34");
}

TEST(Solvers, OddNWithRealVolumeHasPi) {
  // Cl(3,0) in Pauli form: volume i*I again; Cl(2,1) has a real volume matrix.
  EXPECT_THROW(solve_complex_conjugation(brauer_weyl_basis(AlgebraSignature(3, 0))), SolverError);
  const GammaBasis b = brauer_weyl_basis(AlgebraSignature(2, 1));
  EXPECT_NO_THROW(solve_complex_conjugation(b));
}

TEST(StarMatrix, EvenAndOdd) {
  const StarMatrix c = star_matrix(fixture_basis("canonical"));
  EXPECT_TRUE(c.inner_star);
  const StarMatrix s = star_matrix(fixture_basis("sitter"));
  EXPECT_FALSE(s.inner_star);
  EXPECT_EQ(schur_scalar(s.matrix), Gaussian::i());
}

TEST(ExtGroup, CanonicalBlades) {
  const GammaBasis c = fixture_basis("canonical");
  const ExtGroup e = derive_ext_group(c);
  EXPECT_TRUE(e.pi_solved);
  const std::pair<AutKey, const char*> expected[] = {{AutKey::W, "g0123"}, {AutKey::E, "g13"}, {AutKey::C, "g02"},
                                                     {AutKey::Pi, "g013"}, {AutKey::K, "g2"},  {AutKey::S, "g0"},
                                                     {AutKey::F, "g123"}};
  for (auto [k, blade] : expected) EXPECT_EQ(label(c, e.blade(k)), blade) << to_string(k);
  EXPECT_EQ(signature_string(e.signature), "--+--++");
  EXPECT_EQ(signed_order_structure(e.table), (OrderStructure{3, 4}));
}

TEST(ExtGroup, ProductDefinitions) {
  const ExtGroup e = derive_ext_group(fixture_basis("canonical"));
  EXPECT_EQ(e.mat(AutKey::C), e.mat(AutKey::E) * e.mat(AutKey::W));
  EXPECT_EQ(e.mat(AutKey::K), e.mat(AutKey::Pi) * e.mat(AutKey::W));
  EXPECT_EQ(e.mat(AutKey::S), e.mat(AutKey::Pi) * e.mat(AutKey::E));
  EXPECT_EQ(e.mat(AutKey::F), e.mat(AutKey::Pi) * e.mat(AutKey::C));
  for (int k = 0; k < 8; ++k) EXPECT_EQ(e.mats[k], rep_of_blade(e.basis, e.blades[k]));
}

TEST(ExtGroup, SignatureInvariantUnderBasisChange) {
  const ExtGroup c = derive_ext_group(fixture_basis("canonical"));
  const ExtGroup w = derive_ext_group(fixture_basis("weyl"));
  EXPECT_EQ(c.signature, w.signature);
  EXPECT_TRUE(is_isomorphic(full_cpt_group(c), full_cpt_group(w)));
}

TEST(ExtGroup, ListedPiForCl41) {
  const GammaBasis s = fixture_basis("sitter");
  const ExtGroup e = assemble_ext_group(s, rep_of_blade(s, SignedBlade::from_indices({1, 2, 3})));
  EXPECT_FALSE(e.pi_solved);
  EXPECT_FALSE(e.inner_star);
  EXPECT_EQ(signature_string(e.signature), "--+-+-+");
  EXPECT_EQ(label(s, e.blade(AutKey::K)), "g45");
  EXPECT_EQ(label(s, e.blade(AutKey::S)), "g124");
  EXPECT_EQ(label(s, e.blade(AutKey::F)), "g35");
  const GroupTable full = full_cpt_group(e);
  EXPECT_EQ(full.order(), 16u);
  EXPECT_TRUE(is_subgroup_of(full, generate_group(AlgebraSignature(4, 1))));
  EXPECT_THROW(assemble_ext_group(s, GaussianMatrix::identity(2)), std::invalid_argument);
}

TEST(ExtGroup, DegenerateRealBasis) {
  const ExtGroup e = derive_ext_group(fixture_basis("majorana31"));
  EXPECT_EQ(e.mat(AutKey::Pi), GaussianMatrix::identity(4));
  EXPECT_EQ(e.mat(AutKey::K), e.mat(AutKey::W));
  EXPECT_EQ(full_cpt_group(e).order(), 8u);
}

TEST(FullGroup, CanonicalEmbedsInG13) {
  const ExtGroup e = derive_ext_group(fixture_basis("canonical"));
  const GroupTable full = full_cpt_group(e);
  EXPECT_EQ(full.order(), 16u);
  EXPECT_EQ(order_structure(full), (OrderStructure{7, 8}));
  EXPECT_TRUE(is_subgroup_of(full, generate_group(AlgebraSignature(1, 3))));
  EXPECT_THROW(is_subgroup_of(full, generate_group(AlgebraSignature(3, 1))), std::invalid_argument);
  EXPECT_THROW(is_subgroup_of(standard_group(StandardGroup::q4), full), std::invalid_argument);
}

TEST(GeneratingGroup, PtcSignature) {
  const GammaBasis c = fixture_basis("canonical");
  auto word = [&](std::initializer_list<int> idx) { return rep_of_blade(c, SignedBlade::from_indices(idx)); };
  const GeneratingGroup g = generating_group_from_ptc(word({1}), word({2, 4}), word({3, 1}));
  EXPECT_FALSE(g.degenerate);
  EXPECT_EQ(signature_string(g.signature), "+--+--+");
  EXPECT_EQ(g.order_structure, (OrderStructure{3, 4}));
  EXPECT_FALSE(is_abelian(full_cpt_group(g.table)));
}

TEST(GeneratingGroup, SecondTypeChoice) {
  const GammaBasis c = fixture_basis("canonical");
  auto word = [&](std::initializer_list<int> idx) { return rep_of_blade(c, SignedBlade::from_indices(idx)); };
  const GeneratingGroup g =
      generating_group_from_ptc(word({1}) * Gaussian::i(), word({2, 4}), word({1, 3}) * Gaussian::i());
  EXPECT_EQ(signature_string(g.signature), "--+--++");
}

TEST(GeneratingGroup, DegenerateIdentityWords) {
  const GaussianMatrix id = GaussianMatrix::identity(4);
  const GeneratingGroup g = generating_group_from_ptc(id, id, id);
  EXPECT_TRUE(g.degenerate);
  EXPECT_EQ(g.table.size(), 1u);
  EXPECT_EQ(signature_string(g.signature), "+++++++");
}

TEST(GeneratingGroup, RejectsBadWords) {
  const GaussianMatrix id = GaussianMatrix::identity(2);
  EXPECT_THROW(generating_group_from_ptc(id * Gaussian(2), id, id), std::invalid_argument);
  EXPECT_THROW(generating_group_from_ptc(id, GaussianMatrix::identity(4), id), std::invalid_argument);
}

TEST(BladeMaps, CompositionIsBitwiseXor) {
  const auto table = map_composition_table(AlgebraSignature(1, 3));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(static_cast<int>(table[a][b]), a ^ b);
  EXPECT_EQ(map_name(AutKey::C), "rev*star");
  EXPECT_EQ(parse_aut_key("Pi"), AutKey::Pi);
  EXPECT_FALSE(parse_aut_key("X"));
}

TEST(BladeMaps, ApplyMap) {
  const SignedBlade x = SignedBlade::from_indices({1, 2}, Phase::i());
  EXPECT_EQ(apply_map(AutKey::I, x), x);
  EXPECT_EQ(apply_map(AutKey::W, x), x);
  EXPECT_EQ(apply_map(AutKey::E, x), -x);
  EXPECT_EQ(apply_map(AutKey::Pi, x), x.with_phase(Phase::minus_i()));
}

}  // namespace
