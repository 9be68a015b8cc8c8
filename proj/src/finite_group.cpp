#include "clifford/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "clifford/kernels.hpp"

namespace clifford {

namespace {

constexpr std::size_t kFullAssociativityLimit = 128;
constexpr std::size_t kAssociativitySamples = 20000;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<ElementIndex> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  validate();
}

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<ElementIndex> table,
                       AlgebraSignature sig, std::vector<SignedBlade> blades)
    : labels_(std::move(labels)), table_(std::move(table)), sig_(sig), blades_(std::move(blades)) {
  if (blades_.size() != labels_.size()) throw std::invalid_argument("one blade per element required");
  for (const auto& b : blades_) {
    if (!sig.contains(b.mask)) throw std::invalid_argument("element blade outside the signature");
  }
  validate();
}

void GroupTable::validate() {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("empty group");
  if (table_.size() != n * n) throw std::invalid_argument("table is not |G| x |G|");
  for (ElementIndex v : table_) {
    if (v >= n) throw std::invalid_argument("table entry outside the element range (closure)");
  }

  // Latin square: every row and column is a permutation.
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table_[r * n + c]]++) throw std::invalid_argument("row is not a permutation");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table_[r * n + c]]++) throw std::invalid_argument("column is not a permutation");
    }
  }

  std::optional<ElementIndex> identity;
  for (ElementIndex e = 0; e < n; ++e) {
    bool ok = true;
    for (ElementIndex x = 0; x < n && ok; ++x) {
      ok = table_[e * n + x] == x && table_[x * n + e] == x;
    }
    if (ok) {
      if (identity) throw std::invalid_argument("identity is not unique");
      identity = e;
    }
  }
  if (!identity) throw std::invalid_argument("no identity element");
  identity_ = *identity;

  inverses_.assign(n, 0);
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (table_[a * n + b] == identity_) {
        inverses_[a] = b;
        break;
      }
    }
    if (table_[inverses_[a] * n + a] != identity_) throw std::invalid_argument("left/right inverse differ");
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table_[table_[a * n + b] * n + c] == table_[a * n + table_[b * n + c]];
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("table is not associative");
  } else {
    std::uint64_t state = 0x5eed;
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      const std::size_t a = splitmix64(state) % n;
      const std::size_t b = splitmix64(state) % n;
      const std::size_t c = splitmix64(state) % n;
      if (!assoc(a, b, c)) throw std::invalid_argument("table is not associative");
    }
  }
}

std::optional<ElementIndex> GroupTable::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementIndex>(it - labels_.begin());
}

SalingarosLayout::SalingarosLayout(const AlgebraSignature& sig)
    : sig_(sig), masks_(graded_lex_masks(sig.n())), rank_(masks_.size()) {
  for (std::size_t r = 0; r < masks_.size(); ++r) rank_[masks_[r]] = static_cast<ElementIndex>(r);
}

ElementIndex SalingarosLayout::index_of(const SignedBlade& b) const {
  require_real(b);
  if (!sig_.contains(b.mask)) throw std::out_of_range("blade outside the signature");
  return 2 * rank_[b.mask] + (b.phase == Phase::one() ? 0 : 1);
}

GroupTable generate_group(const AlgebraSignature& sig, Execution exec) {
  if (sig.n() > kMaxDenseGenerators) {
    throw std::length_error("n = " + std::to_string(sig.n()) + " exceeds dense-table limit " +
                            std::to_string(kMaxDenseGenerators));
  }
  const SalingarosLayout layout(sig);
  std::vector<std::string> labels;
  std::vector<SignedBlade> blades;
  labels.reserve(layout.order());
  blades.reserve(layout.order());
  for (ElementIndex i = 0; i < layout.order(); ++i) {
    blades.push_back(layout.element(i));
    labels.push_back(format_blade(blades.back(), sig.n()));
  }
  auto table = exec == Execution::parallel ? kernels::cayley_table_parallel(layout)
                                           : kernels::cayley_table_serial(layout);
  return GroupTable(std::move(labels), std::move(table), sig, std::move(blades));
}

ElementIndex salingaros_index(const AlgebraSignature& sig, const SignedBlade& blade) {
  return SalingarosLayout(sig).index_of(blade);
}

int element_order(const GroupTable& g, ElementIndex a) {
  int k = 1;
  for (ElementIndex x = a; x != g.identity(); x = g.multiply(x, a)) ++k;
  return k;
}

std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> out(g.order());
  for (ElementIndex a = 0; a < g.order(); ++a) out[a] = element_order(g, a);
  return out;
}

std::string to_string(const OrderStructure& s) {
  return "(" + std::to_string(s.involutions) + "," + std::to_string(s.order4) + ")";
}

OrderStructure order_structure(const GroupTable& g) {
  OrderStructure s;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    switch (element_order(g, a)) {
      case 1: break;
      case 2: ++s.involutions; break;
      case 4: ++s.order4; break;
      default:
        throw std::domain_error("element " + g.label(a) + " has order outside {1,2,4}");
    }
  }
  return s;
}

bool commutes(const GroupTable& g, ElementIndex a, ElementIndex b) {
  return g.multiply(a, b) == g.multiply(b, a);
}

bool is_abelian(const GroupTable& g) {
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = a + 1; b < g.order(); ++b)
      if (!commutes(g, a, b)) return false;
  return true;
}

std::vector<ElementIndex> generated_subgroup(const GroupTable& g, std::span<const ElementIndex> gens) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<ElementIndex> frontier{g.identity()};
  in[g.identity()] = 1;
  while (!frontier.empty()) {
    const ElementIndex x = frontier.back();
    frontier.pop_back();
    for (ElementIndex s : gens) {
      const ElementIndex y = g.multiply(x, s);
      if (!in[y]) {
        in[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<ElementIndex> out;
  for (ElementIndex a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

GroupTable subgroup(const GroupTable& g, std::span<const ElementIndex> members) {
  std::unordered_map<ElementIndex, ElementIndex> local;
  for (ElementIndex i = 0; i < members.size(); ++i) {
    if (!local.emplace(members[i], i).second) throw std::invalid_argument("repeated subgroup member");
  }
  const std::size_t m = members.size();
  std::vector<ElementIndex> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto it = local.find(g.multiply(members[a], members[b]));
      if (it == local.end()) throw std::invalid_argument("subset is not closed under multiplication");
      table[a * m + b] = it->second;
    }
  }
  std::vector<std::string> labels;
  for (ElementIndex x : members) labels.push_back(g.label(x));
  if (!g.has_blades()) return GroupTable(std::move(labels), std::move(table));
  std::vector<SignedBlade> blades;
  for (ElementIndex x : members) blades.push_back(g.blades()[x]);
  return GroupTable(std::move(labels), std::move(table), *g.signature(), std::move(blades));
}

std::vector<ElementIndex> center_elements(const GroupTable& g) {
  std::vector<ElementIndex> out;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementIndex b = 0; b < g.order() && central; ++b) central = commutes(g, a, b);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<ElementIndex> derived_subgroup(const GroupTable& g) {
  std::vector<std::uint8_t> is_commutator(g.order(), 0);
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      is_commutator[g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b))] = 1;
  std::vector<ElementIndex> gens;
  for (ElementIndex a = 0; a < g.order(); ++a)
    if (is_commutator[a]) gens.push_back(a);
  return generated_subgroup(g, gens);
}

std::string to_string(CenterLabel label) {
  switch (label) {
    case CenterLabel::trivial: return "trivial";
    case CenterLabel::z2: return "Z2";
    case CenterLabel::z4: return "Z4";
    case CenterLabel::z2xz2: return "Z2xZ2";
    default: return "other";
  }
}

CenterInfo center(const GroupTable& g) {
  const auto members = center_elements(g);
  GroupTable z = subgroup(g, members);
  CenterLabel label = CenterLabel::other;
  if (z.order() == 1) {
    label = CenterLabel::trivial;
  } else if (z.order() == 2) {
    label = CenterLabel::z2;
  } else if (z.order() == 4) {
    const auto orders = element_orders(z);
    label = std::count(orders.begin(), orders.end(), 4) > 0 ? CenterLabel::z4 : CenterLabel::z2xz2;
  }
  return {std::move(z), label};
}

std::string to_string(const SalingarosLabel& label) {
  switch (label.family) {
    case SalingarosFamily::z2: return "Z2";
    case SalingarosFamily::omega: return "Omega" + std::to_string(label.k);
    case SalingarosFamily::n: return "N" + std::to_string(label.k);
    default: return "S" + std::to_string(label.k);
  }
}

SalingarosLabel classify_salingaros(const GroupTable& g) {
  const std::size_t order = g.order();
  if (!is_power_of_two(order)) throw std::domain_error("order is not a power of two");
  if (order == 2) return {SalingarosFamily::z2, 0};
  const CenterInfo z = center(g);
  if (order == 4) {
    if (z.label == CenterLabel::z2xz2) return {SalingarosFamily::omega, 0};
    if (z.label == CenterLabel::z4) return {SalingarosFamily::s, 0};
    throw std::domain_error("order-4 group outside the Salingaros base cases");
  }
  if (derived_subgroup(g).size() != 2) throw std::domain_error("commutator subgroup is not of order 2");

  const int m = std::countr_zero(order);  // |G| = 2^m
  const std::size_t inv = order_structure(g).involutions;
  switch (z.label) {
    case CenterLabel::z2: {
      // Extraspecial 2^{1+2k}: involution count separates the two types.
      if (m % 2 == 0) break;
      const int k = (m - 1) / 2;
      const std::size_t big = std::size_t{1} << (2 * k);
      const std::size_t half = std::size_t{1} << k;
      if (inv == big + half - 1) return {SalingarosFamily::n, 2 * k - 1};
      if (inv == big - half - 1) return {SalingarosFamily::n, 2 * k};
      break;
    }
    case CenterLabel::z2xz2: {
      // N x Z2 of order 2^{2k+2}.
      if (m % 2 == 1) break;
      const int k = (m - 2) / 2;
      const std::size_t big = std::size_t{1} << (2 * k + 1);
      const std::size_t half = std::size_t{1} << (k + 1);
      if (inv == big + half - 1) return {SalingarosFamily::omega, 2 * k - 1};
      if (inv == big - half - 1) return {SalingarosFamily::omega, 2 * k};
      break;
    }
    case CenterLabel::z4: {
      // N o Z4 of order 2^{2k+2}: (x,1)^2 = (x^2,2) is trivial iff x has
      // order 4 in N, so the involutions number |N| - 1 = 2^{2k+1} - 1.
      if (m % 2 == 1) break;
      const int k = (m - 2) / 2;
      if (inv == (std::size_t{1} << (2 * k + 1)) - 1) return {SalingarosFamily::s, k};
      break;
    }
    default: break;
  }
  throw std::domain_error("center/order pattern outside the Salingaros taxonomy");
}

SalingarosLabel salingaros_label_for(const AlgebraSignature& sig) {
  const int n = sig.n();
  const int r = sig.p_minus_q_mod8();
  if (n % 2 == 0) {
    const int k = n / 2;
    return (r == 0 || r == 2) ? SalingarosLabel{SalingarosFamily::n, 2 * k - 1}
                              : SalingarosLabel{SalingarosFamily::n, 2 * k};
  }
  const int k = (n - 1) / 2;
  switch (r) {
    case 1: return {SalingarosFamily::omega, k == 0 ? 0 : 2 * k - 1};
    case 5: return {SalingarosFamily::omega, 2 * k};
    default: return {SalingarosFamily::s, k};
  }
}

std::vector<ElementIndex> central_involutions(const GroupTable& g) {
  std::vector<ElementIndex> out;
  for (ElementIndex z : center_elements(g))
    if (z != g.identity() && g.multiply(z, z) == g.identity()) out.push_back(z);
  return out;
}

namespace {

ElementIndex pick_involution(const GroupTable& g, std::optional<ElementIndex> choice, const char* which) {
  const auto candidates = central_involutions(g);
  if (candidates.empty()) {
    throw std::invalid_argument(std::string(which) + " factor has no central involution");
  }
  if (!choice) return candidates.front();
  if (std::find(candidates.begin(), candidates.end(), *choice) == candidates.end()) {
    throw std::invalid_argument(std::string(which) + " choice is not a central involution");
  }
  return *choice;
}

}  // namespace

GroupTable central_product(const GroupTable& g, const GroupTable& h, std::optional<ElementIndex> zg,
                           std::optional<ElementIndex> zh) {
  const ElementIndex z1 = pick_involution(g, zg, "first");
  const ElementIndex z2 = pick_involution(h, zh, "second");
  const std::size_t nh = h.order();
  auto pair_key = [nh](ElementIndex a, ElementIndex b) { return static_cast<std::size_t>(a) * nh + b; };
  auto canonical = [&](ElementIndex a, ElementIndex b) {
    return std::min(pair_key(a, b), pair_key(g.multiply(a, z1), h.multiply(b, z2)));
  };

  std::vector<std::size_t> reps;
  std::unordered_map<std::size_t, ElementIndex> index;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = 0; b < nh; ++b) {
      const std::size_t key = pair_key(a, b);
      if (canonical(a, b) == key) {
        index.emplace(key, static_cast<ElementIndex>(reps.size()));
        reps.push_back(key);
      }
    }
  }

  const std::size_t m = reps.size();
  std::vector<ElementIndex> table(m * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto a1 = static_cast<ElementIndex>(reps[i] / nh);
    const auto b1 = static_cast<ElementIndex>(reps[i] % nh);
    labels.push_back("(" + g.label(a1) + "," + h.label(b1) + ")");
    for (std::size_t j = 0; j < m; ++j) {
      const auto a2 = static_cast<ElementIndex>(reps[j] / nh);
      const auto b2 = static_cast<ElementIndex>(reps[j] % nh);
      table[i * m + j] = index.at(canonical(g.multiply(a1, a2), h.multiply(b1, b2)));
    }
  }
  return GroupTable(std::move(labels), std::move(table));
}

GroupTable even_subgroup(const GroupTable& g) {
  if (!g.has_blades()) throw std::invalid_argument("even subgroup needs blade-labelled elements");
  std::vector<ElementIndex> members;
  for (ElementIndex a = 0; a < g.order(); ++a)
    if (g.blades()[a].grade() % 2 == 0) members.push_back(a);
  return subgroup(g, members);
}

}  // namespace clifford
