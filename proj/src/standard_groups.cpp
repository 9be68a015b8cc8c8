#include <array>
#include <map>
#include <stdexcept>

#include "clifford/finite_group.hpp"

namespace clifford {

namespace {

// Closes `gens` under multiplication starting from `identity`; elements are
// numbered in breadth-first order and labelled by their shortest word.
template <typename T, typename Mul>
GroupTable close_under(const T& identity, const std::vector<std::pair<std::string, T>>& gens, Mul mul) {
  std::vector<T> elements{identity};
  std::vector<std::string> labels{"1"};
  std::map<T, ElementIndex> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& [name, s] : gens) {
      const T next = mul(elements[head], s);
      if (index.emplace(next, static_cast<ElementIndex>(elements.size())).second) {
        elements.push_back(next);
        labels.push_back(head == 0 ? name : labels[head] + name);
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(mul(elements[a], elements[b]));
  return GroupTable(std::move(labels), std::move(table));
}

using Perm4 = std::array<int, 4>;

Perm4 compose(const Perm4& a, const Perm4& b) {  // apply a, then b
  Perm4 out{};
  for (int i = 0; i < 4; ++i) out[i] = b[a[i]];
  return out;
}

// Unit quaternions +-1, +-i, +-j, +-k as (sign, unit) with unit 0..3 = 1,i,j,k.
struct Quaternion {
  int sign;
  int unit;
  friend auto operator<=>(const Quaternion&, const Quaternion&) = default;
};

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  // unit products: row a.unit, column b.unit -> (sign, unit)
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return {a.sign * b.sign * kSign[a.unit][b.unit], kUnit[a.unit][b.unit]};
}

GroupTable cyclic(int n) {
  return close_under(0, std::vector<std::pair<std::string, int>>{{"a", 1}},
                     [n](int x, int y) { return (x + y) % n; });
}

}  // namespace

std::string to_string(StandardGroup which) {
  switch (which) {
    case StandardGroup::q4: return "Q4";
    case StandardGroup::d4: return "D4";
    case StandardGroup::d2: return "D2";
    case StandardGroup::z4: return "Z4";
    default: return "Z2";
  }
}

GroupTable standard_group(StandardGroup which) {
  switch (which) {
    case StandardGroup::q4:
      return close_under(Quaternion{1, 0},
                         std::vector<std::pair<std::string, Quaternion>>{{"i", {1, 1}}, {"j", {1, 2}}},
                         qmul);
    case StandardGroup::d4:
      // Symmetries of a square: rotation r and a reflection s.
      return close_under(Perm4{0, 1, 2, 3},
                         std::vector<std::pair<std::string, Perm4>>{{"r", {1, 2, 3, 0}}, {"s", {0, 3, 2, 1}}},
                         compose);
    case StandardGroup::d2:
      return close_under(0, std::vector<std::pair<std::string, int>>{{"a", 1}, {"b", 2}},
                         [](int x, int y) { return x ^ y; });
    case StandardGroup::z4: return cyclic(4);
    case StandardGroup::z2: return cyclic(2);
  }
  throw std::invalid_argument("unknown standard group");
}

}  // namespace clifford
