#pragma once

// Exhaustive data-parallel loops, each in a serial reference form and an
// OpenMP form. The two must return identical results; tests compare them.

#include <cstdint>
#include <span>
#include <vector>

#include "clifford/finite_group.hpp"
#include "clifford/gamma.hpp"

namespace clifford::kernels {

/// Row-major Cayley table of G(p,q) in SalingarosLayout order.
std::vector<ElementIndex> cayley_table_serial(const SalingarosLayout& layout);
std::vector<ElementIndex> cayley_table_parallel(const SalingarosLayout& layout);

/// Number of triples (a,b,c) with (ab)c != a(bc); table is order x order.
std::uint64_t associativity_violations_serial(std::span<const ElementIndex> table, std::size_t order);
std::uint64_t associativity_violations_parallel(std::span<const ElementIndex> table, std::size_t order);

/// Same over `samples` triples; triple t is drawn from a counter-based hash
/// of (seed, t), so the sample set does not depend on scheduling.
std::uint64_t sampled_associativity_violations_serial(std::span<const ElementIndex> table, std::size_t order,
                                                      std::uint64_t samples, std::uint64_t seed);
std::uint64_t sampled_associativity_violations_parallel(std::span<const ElementIndex> table, std::size_t order,
                                                        std::uint64_t samples, std::uint64_t seed);

/// Pairs (a,b) of G(p,q) elements with rep(a) rep(b) != rep(ab).
std::uint64_t homomorphism_violations_serial(const GammaBasis& basis);
std::uint64_t homomorphism_violations_parallel(const GammaBasis& basis);

/// splitmix64 finalizer applied to x.
std::uint64_t mix64(std::uint64_t x);

}  // namespace clifford::kernels
