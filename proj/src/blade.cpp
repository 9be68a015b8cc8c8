#include "clifford/blade.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace clifford {

namespace {

Phase sign_phase(int flips) { return (flips & 1) ? Phase::minus_one() : Phase::one(); }

void check_in_range(const SignedBlade& b, const AlgebraSignature& sig) {
  if (!sig.contains(b.mask)) {
    throw std::out_of_range("blade uses a generator outside 1.." + std::to_string(sig.n()));
  }
}

}  // namespace

AlgebraSignature::AlgebraSignature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxGenerators) {
    throw std::invalid_argument("signature (" + std::to_string(p) + "," + std::to_string(q) +
                                ") outside 1 <= p+q <= " + std::to_string(kMaxGenerators));
  }
}

int AlgebraSignature::square_sign(int generator) const {
  if (generator < 1 || generator > n()) {
    throw std::out_of_range("generator " + std::to_string(generator) + " outside 1.." +
                            std::to_string(n()));
  }
  return generator <= p_ ? 1 : -1;
}

BladeMask AlgebraSignature::negative_mask() const { return full_mask() & ~((BladeMask{1} << p_) - 1); }

int AlgebraSignature::p_minus_q_mod8() const { return (((p_ - q_) % 8) + 8) % 8; }

std::string to_string(Phase phase) {
  switch (phase.exponent()) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

SignedBlade SignedBlade::from_indices(std::span<const int> indices, Phase phase) {
  BladeMask mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) {
      throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
    }
    const BladeMask bit = BladeMask{1} << (i - 1);
    if (mask & bit) throw std::invalid_argument("repeated generator index " + std::to_string(i));
    mask |= bit;
  }
  // Bring an arbitrary order into ascending order: each inversion is one swap.
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (indices[a] > indices[b]) ++inversions;
  return {phase * sign_phase(inversions), mask};
}

int SignedBlade::grade() const { return std::popcount(mask); }

std::vector<int> SignedBlade::indices() const {
  std::vector<int> out;
  for (BladeMask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int reorder_swaps(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return swaps;
}

SignedBlade blade_product(const SignedBlade& a, const SignedBlade& b, const AlgebraSignature& sig) {
  check_in_range(a, sig);
  check_in_range(b, sig);
  const int flips = reorder_swaps(a.mask, b.mask) + std::popcount(a.mask & b.mask & sig.negative_mask());
  return {a.phase * b.phase * sign_phase(flips), a.mask ^ b.mask};
}

SignedBlade grade_involution(const SignedBlade& a) {
  const int k = a.grade();
  return {a.phase * sign_phase(k), a.mask};
}

SignedBlade reversion(const SignedBlade& a) {
  const int k = a.grade();
  return {a.phase * sign_phase(k * (k - 1) / 2), a.mask};
}

SignedBlade clifford_conjugation(const SignedBlade& a) {
  const int k = a.grade();
  return {a.phase * sign_phase(k * (k + 1) / 2), a.mask};
}

SignedBlade pseudo_conjugation(const SignedBlade& a) { return {a.phase.conj(), a.mask}; }

void require_real(const SignedBlade& a) {
  if (!a.phase.is_real()) throw std::domain_error("blade phase is not real");
}

SignedBlade volume_element(const AlgebraSignature& sig) { return {Phase::one(), sig.full_mask()}; }

int volume_square_closed_form(const AlgebraSignature& sig) {
  switch (sig.p_minus_q_mod8()) {
    case 2: case 3: case 6: case 7: return -1;
    default: return 1;
  }
}

int volume_square_direct(const AlgebraSignature& sig) {
  const SignedBlade w = volume_element(sig);
  const SignedBlade sq = blade_product(w, w, sig);
  if (sq.mask != 0 || !sq.phase.is_real()) throw std::logic_error("omega^2 is not a real scalar");
  return sq.phase == Phase::one() ? 1 : -1;
}

int volume_square(const AlgebraSignature& sig) {
  const int closed = volume_square_closed_form(sig);
  if (closed != volume_square_direct(sig)) {
    throw std::logic_error("mod-8 omega^2 law disagrees with the blade product");
  }
  return closed;
}

std::string to_string(CenterType type) { return type == CenterType::trivial ? "{1}" : "{1,omega}"; }

CenterType center_type_closed_form(const AlgebraSignature& sig) {
  return (sig.p_minus_q_mod8() % 2 == 1) ? CenterType::two_element : CenterType::trivial;
}

CenterType center_type_direct(const AlgebraSignature& sig) {
  const SignedBlade w = volume_element(sig);
  for (int i = 1; i <= sig.n(); ++i) {
    const SignedBlade e = SignedBlade::from_indices({i});
    if (blade_product(w, e, sig) != blade_product(e, w, sig)) return CenterType::trivial;
  }
  return CenterType::two_element;
}

CenterType center_type(const AlgebraSignature& sig) {
  const CenterType closed = center_type_closed_form(sig);
  if (closed != center_type_direct(sig)) {
    throw std::logic_error("mod-8 center law disagrees with the blade product");
  }
  return closed;
}

MatrixAlgebraClass matrix_algebra_class(const AlgebraSignature& sig) {
  const int n = sig.n();
  switch (sig.p_minus_q_mod8()) {
    case 0: case 2: return {'R', 1 << (n / 2), false};
    case 1: return {'R', 1 << ((n - 1) / 2), true};
    case 3: case 7: return {'C', 1 << ((n - 1) / 2), false};
    case 4: case 6: return {'H', 1 << ((n - 2) / 2), false};
    default: return {'H', 1 << ((n - 3) / 2), true};
  }
}

std::string to_string(const MatrixAlgebraClass& cls) {
  const std::string one = cls.size == 1 ? std::string(1, cls.ring)
                                        : "M" + std::to_string(cls.size) + "(" + cls.ring + ")";
  return cls.doubled ? one + "+" + one : one;
}

bool graded_lex_less(BladeMask a, BladeMask b) {
  const int ga = std::popcount(a);
  const int gb = std::popcount(b);
  if (ga != gb) return ga < gb;
  // Same grade: the first differing generator decides; the set holding the
  // smaller one comes first.
  const BladeMask diff = a ^ b;
  if (diff == 0) return false;
  const BladeMask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

std::vector<BladeMask> graded_lex_masks(int n) {
  std::vector<BladeMask> masks(std::size_t{1} << n);
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<BladeMask>(m);
  std::sort(masks.begin(), masks.end(), graded_lex_less);
  return masks;
}

std::string format_mask(BladeMask mask, int n) {
  if (mask == 0) return "1";
  std::string out = "e";
  const bool braces = n >= 10;
  if (braces) out += "{";
  bool first = true;
  for (BladeMask m = mask; m != 0; m &= m - 1) {
    if (braces && !first) out += ",";
    out += std::to_string(std::countr_zero(m) + 1);
    first = false;
  }
  if (braces) out += "}";
  return out;
}

std::string format_blade(const SignedBlade& blade, int n) {
  const int k = blade.phase.exponent();
  const std::string sign = (k >= 2) ? "-" : "";
  const bool imaginary = (k & 1) != 0;
  if (blade.mask == 0) return sign + (imaginary ? "i" : "1");
  return sign + (imaginary ? "i*" : "") + format_mask(blade.mask, n);
}

}  // namespace clifford
