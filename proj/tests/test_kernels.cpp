#include <gtest/gtest.h>

#include "clifford/finite_group.hpp"
#include "clifford/kernels.hpp"

namespace {

using namespace clifford;

TEST(Kernels, CayleyTableSerialEqualsParallel) {
  for (int n = 1; n <= 8; ++n) {
    const SalingarosLayout layout(AlgebraSignature(n - n / 3, n / 3));
    EXPECT_EQ(kernels::cayley_table_serial(layout), kernels::cayley_table_parallel(layout)) << n;
  }
}

TEST(Kernels, AssociativitySerialEqualsParallel) {
  const SalingarosLayout layout(AlgebraSignature(2, 2));
  std::vector<ElementIndex> table = kernels::cayley_table_serial(layout);
  EXPECT_EQ(kernels::associativity_violations_serial(table, layout.order()), 0u);
  EXPECT_EQ(kernels::associativity_violations_parallel(table, layout.order()), 0u);
  // Corrupt one product; both forms must count the same violations.
  std::swap(table[3 * layout.order() + 5], table[3 * layout.order() + 6]);
  const auto serial = kernels::associativity_violations_serial(table, layout.order());
  EXPECT_GT(serial, 0u);
  EXPECT_EQ(kernels::associativity_violations_parallel(table, layout.order()), serial);
}

TEST(Kernels, SampledAssociativityIsDeterministic) {
  const SalingarosLayout layout(AlgebraSignature(4, 4));
  std::vector<ElementIndex> table = kernels::cayley_table_parallel(layout);
  EXPECT_EQ(kernels::sampled_associativity_violations_parallel(table, layout.order(), 100000, 42), 0u);
  std::swap(table[7 * layout.order() + 9], table[7 * layout.order() + 10]);
  const auto serial = kernels::sampled_associativity_violations_serial(table, layout.order(), 200000, 42);
  EXPECT_EQ(kernels::sampled_associativity_violations_parallel(table, layout.order(), 200000, 42), serial);
}

TEST(Kernels, HomomorphismSerialEqualsParallel) {
  for (const auto& name : fixture_names()) {
    const GammaBasis b = fixture_basis(name);
    EXPECT_EQ(kernels::homomorphism_violations_serial(b), kernels::homomorphism_violations_parallel(b));
  }
}

TEST(Kernels, Mix64Spreads) {
  EXPECT_NE(kernels::mix64(1), kernels::mix64(2));
  EXPECT_EQ(kernels::mix64(12345), kernels::mix64(12345));
}

}  // namespace
