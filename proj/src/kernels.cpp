#include "clifford/kernels.hpp"

namespace clifford::kernels {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// One row of the table: products of element `row` with every element.
void fill_row(const SalingarosLayout& layout, ElementIndex row, ElementIndex* out) {
  const SignedBlade a = layout.element(row);
  for (ElementIndex c = 0; c < layout.order(); ++c) {
    out[c] = layout.index_of(blade_product(a, layout.element(c), layout.signature()));
  }
}

inline bool associative_at(std::span<const ElementIndex> t, std::size_t n, std::size_t a, std::size_t b,
                           std::size_t c) {
  return t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
}

struct Triple {
  std::size_t a, b, c;
};

inline Triple sample_triple(std::uint64_t seed, std::uint64_t t, std::size_t n) {
  const std::uint64_t base = mix64(seed) ^ (t * 3);
  return {mix64(base) % n, mix64(base + 1) % n, mix64(base + 2) % n};
}

struct RepTable {
  SalingarosLayout layout;
  std::vector<GaussianMatrix> reps;
};

RepTable element_reps(const GammaBasis& basis) {
  RepTable out{SalingarosLayout(basis.signature()), {}};
  out.reps.reserve(out.layout.order());
  for (ElementIndex i = 0; i < out.layout.order(); ++i) out.reps.push_back(rep_of_blade(basis, out.layout.element(i)));
  return out;
}

}  // namespace

std::vector<ElementIndex> cayley_table_serial(const SalingarosLayout& layout) {
  const std::size_t n = layout.order();
  std::vector<ElementIndex> table(n * n);
  for (std::size_t r = 0; r < n; ++r) fill_row(layout, static_cast<ElementIndex>(r), table.data() + r * n);
  return table;
}

std::vector<ElementIndex> cayley_table_parallel(const SalingarosLayout& layout) {
  const std::int64_t n = static_cast<std::int64_t>(layout.order());
  std::vector<ElementIndex> table(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) fill_row(layout, static_cast<ElementIndex>(r), table.data() + r * n);
  return table;
}

std::uint64_t associativity_violations_serial(std::span<const ElementIndex> table, std::size_t order) {
  std::uint64_t bad = 0;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (!associative_at(table, order, a, b, c)) ++bad;
  return bad;
}

std::uint64_t associativity_violations_parallel(std::span<const ElementIndex> table, std::size_t order) {
  std::uint64_t bad = 0;
  const std::int64_t n = static_cast<std::int64_t>(order);
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (!associative_at(table, order, static_cast<std::size_t>(a), b, c)) ++bad;
  return bad;
}

std::uint64_t sampled_associativity_violations_serial(std::span<const ElementIndex> table, std::size_t order,
                                                      std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const Triple x = sample_triple(seed, t, order);
    if (!associative_at(table, order, x.a, x.b, x.c)) ++bad;
  }
  return bad;
}

std::uint64_t sampled_associativity_violations_parallel(std::span<const ElementIndex> table, std::size_t order,
                                                        std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t bad = 0;
  const std::int64_t count = static_cast<std::int64_t>(samples);
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    const Triple x = sample_triple(seed, static_cast<std::uint64_t>(t), order);
    if (!associative_at(table, order, x.a, x.b, x.c)) ++bad;
  }
  return bad;
}

std::uint64_t homomorphism_violations_serial(const GammaBasis& basis) {
  const RepTable rt = element_reps(basis);
  const auto& sig = basis.signature();
  std::uint64_t bad = 0;
  for (ElementIndex a = 0; a < rt.layout.order(); ++a) {
    for (ElementIndex b = 0; b < rt.layout.order(); ++b) {
      const ElementIndex ab = rt.layout.index_of(blade_product(rt.layout.element(a), rt.layout.element(b), sig));
      if (rt.reps[a] * rt.reps[b] != rt.reps[ab]) ++bad;
    }
  }
  return bad;
}

std::uint64_t homomorphism_violations_parallel(const GammaBasis& basis) {
  const RepTable rt = element_reps(basis);
  const auto& sig = basis.signature();
  const std::int64_t n = static_cast<std::int64_t>(rt.layout.order());
  std::uint64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 4)
  for (std::int64_t a = 0; a < n; ++a) {
    const auto ea = rt.layout.element(static_cast<ElementIndex>(a));
    for (ElementIndex b = 0; b < rt.layout.order(); ++b) {
      const ElementIndex ab = rt.layout.index_of(blade_product(ea, rt.layout.element(b), sig));
      if (rt.reps[a] * rt.reps[b] != rt.reps[ab]) ++bad;
    }
  }
  return bad;
}

}  // namespace clifford::kernels
