#pragma once

// Finite groups as dense Cayley tables, and the analyses needed for the
// Salingaros groups G(p,q): order structure, center, classification,
// central products, even subgroups.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clifford/blade.hpp"

namespace clifford {

using ElementIndex = std::uint32_t;

class GroupTable {
 public:
  /// `table` is row-major |G| x |G|. Validates closure, a unique identity and
  /// Latin-square rows/columns; associativity is checked exhaustively up to
  /// order 128 and on a fixed sample above that. Throws std::invalid_argument.
  GroupTable(std::vector<std::string> labels, std::vector<ElementIndex> table);

  /// Same, with each element tied to a blade of `sig`.
  GroupTable(std::vector<std::string> labels, std::vector<ElementIndex> table,
             AlgebraSignature sig, std::vector<SignedBlade> blades);

  std::size_t order() const { return labels_.size(); }
  ElementIndex identity() const { return identity_; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return table_[a * order() + b]; }
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }

  const std::string& label(ElementIndex a) const { return labels_[a]; }
  std::span<const std::string> labels() const { return labels_; }
  std::span<const ElementIndex> table() const { return table_; }

  bool has_blades() const { return sig_.has_value(); }
  const std::optional<AlgebraSignature>& signature() const { return sig_; }
  std::span<const SignedBlade> blades() const { return blades_; }

  /// Index of the element with this label, if any.
  std::optional<ElementIndex> find_label(const std::string& label) const;

 private:
  void validate();

  std::vector<std::string> labels_;
  std::vector<ElementIndex> table_;
  ElementIndex identity_ = 0;
  std::vector<ElementIndex> inverses_;
  std::optional<AlgebraSignature> sig_;
  std::vector<SignedBlade> blades_;
};

/// Canonical element order of G(p,q): graded-lex on the index set, +e_S
/// before -e_S.
class SalingarosLayout {
 public:
  explicit SalingarosLayout(const AlgebraSignature& sig);

  const AlgebraSignature& signature() const { return sig_; }
  std::size_t order() const { return masks_.size() * 2; }
  SignedBlade element(ElementIndex i) const {
    return {(i & 1) ? Phase::minus_one() : Phase::one(), masks_[i >> 1]};
  }
  /// Throws std::domain_error for a non-real phase.
  ElementIndex index_of(const SignedBlade& b) const;

 private:
  AlgebraSignature sig_;
  std::vector<BladeMask> masks_;
  std::vector<ElementIndex> rank_;
};

/// Largest n for dense-table generation (|G| = 2^{n+1} <= 2048).
inline constexpr int kMaxDenseGenerators = 10;

enum class Execution { serial, parallel };

/// G(p,q) = {+-e_S}: graded-lex on S, +e_S before -e_S. Throws
/// std::length_error if n > 10.
GroupTable generate_group(const AlgebraSignature& sig, Execution exec = Execution::serial);

/// Index of +-e_S inside generate_group(sig).
ElementIndex salingaros_index(const AlgebraSignature& sig, const SignedBlade& blade);

int element_order(const GroupTable& g, ElementIndex a);
std::vector<int> element_orders(const GroupTable& g);

struct OrderStructure {
  std::size_t involutions = 0;
  std::size_t order4 = 0;
  friend bool operator==(const OrderStructure&, const OrderStructure&) = default;
};

std::string to_string(const OrderStructure& s);

/// Throws std::domain_error if some element has order outside {1,2,4}.
OrderStructure order_structure(const GroupTable& g);

bool is_abelian(const GroupTable& g);
bool commutes(const GroupTable& g, ElementIndex a, ElementIndex b);

/// Elements of the subgroup generated by `gens`, sorted.
std::vector<ElementIndex> generated_subgroup(const GroupTable& g, std::span<const ElementIndex> gens);

/// Restriction of `g` to `members` (must be closed). Blades carry over.
GroupTable subgroup(const GroupTable& g, std::span<const ElementIndex> members);

std::vector<ElementIndex> center_elements(const GroupTable& g);
std::vector<ElementIndex> derived_subgroup(const GroupTable& g);

enum class CenterLabel { trivial, z2, z4, z2xz2, other };

std::string to_string(CenterLabel label);

struct CenterInfo {
  GroupTable group;
  CenterLabel label;
};

CenterInfo center(const GroupTable& g);

enum class SalingarosFamily { z2, omega, n, s };

struct SalingarosLabel {
  SalingarosFamily family;
  int k = 0;
  friend bool operator==(const SalingarosLabel&, const SalingarosLabel&) = default;
};

/// "Z2", "Omega3", "N4", "S2".
std::string to_string(const SalingarosLabel& label);

/// From the group structure alone. Throws std::domain_error when the group
/// falls outside the Salingaros families.
SalingarosLabel classify_salingaros(const GroupTable& g);

/// The label Cl(p,q) is known to produce, from (p - q) mod 8 and n.
SalingarosLabel salingaros_label_for(const AlgebraSignature& sig);

enum class StandardGroup { q4, d4, d2, z4, z2 };

GroupTable standard_group(StandardGroup which);
std::string to_string(StandardGroup which);

/// Central involutions of g, in element order.
std::vector<ElementIndex> central_involutions(const GroupTable& g);

/// (G x H) / <(z_G, z_H)>. Without an explicit choice, z is the first central
/// involution of each factor (the unique one for Z4, Q4, D4 and every
/// extraspecial factor). Throws std::invalid_argument if a factor has none or
/// a given index is not a central involution.
GroupTable central_product(const GroupTable& g, const GroupTable& h,
                           std::optional<ElementIndex> zg = std::nullopt,
                           std::optional<ElementIndex> zh = std::nullopt);

/// Elements +-e_S with |S| even. Requires a blade-labelled group.
GroupTable even_subgroup(const GroupTable& g);

}  // namespace clifford
