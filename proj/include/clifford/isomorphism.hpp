#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clifford/finite_group.hpp"

namespace clifford {

inline constexpr std::size_t kMaxIsomorphismOrder = 128;

/// Isomorphism invariants compared before any search.
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> order_histogram;  // element order -> count
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool abelian = false;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupTable& g);

/// witness[a] is the image in H of element a of G.
using Isomorphism = std::vector<ElementIndex>;

/// Bijective, and witness[ab] == witness[a] witness[b] for every pair.
bool verify_isomorphism(const GroupTable& g, const GroupTable& h, const Isomorphism& witness);

/// Fingerprint comparison, then a backtracking search mapping a small
/// generating set of G. The returned witness has been verified against the
/// full tables. Throws std::length_error if |G| or |H| exceeds 128.
std::optional<Isomorphism> find_isomorphism(const GroupTable& g, const GroupTable& h);

inline bool is_isomorphic(const GroupTable& g, const GroupTable& h) {
  return find_isomorphism(g, h).has_value();
}

/// Greedy irredundant generating set: each step adds the element that
/// enlarges the generated subgroup most (lowest index on ties).
std::vector<ElementIndex> generating_set(const GroupTable& g);

}  // namespace clifford
