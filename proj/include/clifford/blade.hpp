#pragma once

// Signed basis blades of Cl(p,q) and its complexification.
//
// A blade e_S is stored as a bit set over the generators (bit i-1 for
// generator i). Phases live in Z4 (i^k) so the same type serves the real
// algebra (k in {0,2}) and the complexified one.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace clifford {

using BladeMask = std::uint32_t;

inline constexpr int kMaxGenerators = 12;

class AlgebraSignature {
 public:
  /// Generators 1..p square to +1, p+1..p+q to -1. Requires 1 <= p+q <= 12.
  AlgebraSignature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  /// +1 or -1; `generator` is 1-based.
  int square_sign(int generator) const;

  /// Bits of the generators squaring to -1.
  BladeMask negative_mask() const;
  BladeMask full_mask() const { return (BladeMask{1} << n()) - 1; }
  bool contains(BladeMask mask) const { return (mask & ~full_mask()) == 0; }

  /// (p - q) mod 8, in 0..7.
  int p_minus_q_mod8() const;

  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

 private:
  int p_;
  int q_;
};

/// An element i^k of Z4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int k) : k_(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1) == 0; }

  constexpr Phase operator*(Phase other) const { return Phase(k_ + other.k_); }
  constexpr Phase operator-() const { return Phase(k_ + 2); }
  constexpr Phase conj() const { return Phase(4 - k_); }

  friend constexpr bool operator==(Phase, Phase) = default;

 private:
  std::uint8_t k_ = 0;
};

/// "+1", "-1", "+i", "-i".
std::string to_string(Phase phase);

struct SignedBlade {
  Phase phase;
  BladeMask mask = 0;

  static SignedBlade unit(Phase phase = Phase::one()) { return {phase, 0}; }

  /// Indices are 1-based, any order, no repeats.
  static SignedBlade from_indices(std::span<const int> indices, Phase phase = Phase::one());
  static SignedBlade from_indices(std::initializer_list<int> indices,
                                  Phase phase = Phase::one()) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()), phase);
  }

  int grade() const;
  std::vector<int> indices() const;

  SignedBlade operator-() const { return {-phase, mask}; }
  SignedBlade with_phase(Phase p) const { return {p, mask}; }

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Number of adjacent transpositions needed to sort the concatenation of the
/// index sequences of `a` and `b` (repeated generators are brought together,
/// not cancelled).
int reorder_swaps(BladeMask a, BladeMask b);

/// Throws std::out_of_range if either blade uses a generator outside 1..n.
SignedBlade blade_product(const SignedBlade& a, const SignedBlade& b, const AlgebraSignature& sig);

SignedBlade grade_involution(const SignedBlade& a);
SignedBlade reversion(const SignedBlade& a);
SignedBlade clifford_conjugation(const SignedBlade& a);
/// Complex conjugation of the phase; identity on the index set.
SignedBlade pseudo_conjugation(const SignedBlade& a);

/// Throws std::domain_error unless the phase is +1 or -1.
void require_real(const SignedBlade& a);

/// Volume element e_1 e_2 ... e_n with phase +1.
SignedBlade volume_element(const AlgebraSignature& sig);

/// omega^2 from the mod-8 rule.
int volume_square_closed_form(const AlgebraSignature& sig);
/// omega^2 from the blade product.
int volume_square_direct(const AlgebraSignature& sig);
/// Closed form, cross-checked against the direct product (std::logic_error on disagreement).
int volume_square(const AlgebraSignature& sig);

enum class CenterType { trivial, two_element };

std::string to_string(CenterType type);

CenterType center_type_closed_form(const AlgebraSignature& sig);
/// two_element iff omega commutes with every generator.
CenterType center_type_direct(const AlgebraSignature& sig);
CenterType center_type(const AlgebraSignature& sig);

/// Real matrix-algebra type of Cl(p,q): K-matrices of size `size`, doubled
/// (K(size) + K(size)) when p - q = 1 mod 4.
struct MatrixAlgebraClass {
  char ring;  // 'R', 'C' or 'H'
  int size;
  bool doubled;
};

MatrixAlgebraClass matrix_algebra_class(const AlgebraSignature& sig);
std::string to_string(const MatrixAlgebraClass& cls);

/// Orders by grade, then lexicographically on ascending index sequences.
bool graded_lex_less(BladeMask a, BladeMask b);

/// All 2^n masks in graded-lexicographic order.
std::vector<BladeMask> graded_lex_masks(int n);

/// Index part only: "1", "e12", or "e{1,2,10}" when n >= 10.
std::string format_mask(BladeMask mask, int n);

/// Phase-prefixed: "e12", "-e12", "i*e3", "-i", ...
std::string format_blade(const SignedBlade& blade, int n);

}  // namespace clifford
