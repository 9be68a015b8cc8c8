#include "clifford/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifford {

GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (int o : element_orders(g)) ++f.order_histogram[o];
  f.center_order = center_elements(g).size();
  f.derived_order = derived_subgroup(g).size();
  f.abelian = is_abelian(g);
  return f;
}

bool verify_isomorphism(const GroupTable& g, const GroupTable& h, const Isomorphism& witness) {
  if (g.order() != h.order() || witness.size() != g.order()) return false;
  std::vector<std::uint8_t> hit(h.order(), 0);
  for (ElementIndex image : witness) {
    if (image >= h.order() || hit[image]++) return false;
  }
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (witness[g.multiply(a, b)] != h.multiply(witness[a], witness[b])) return false;
  return true;
}

std::vector<ElementIndex> generating_set(const GroupTable& g) {
  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> current{g.identity()};
  while (current.size() < g.order()) {
    ElementIndex best = 0;
    std::size_t best_size = 0;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      gens.push_back(x);
      const std::size_t size = generated_subgroup(g, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

namespace {

std::vector<std::size_t> centralizer_sizes(const GroupTable& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (commutes(g, a, b)) ++out[a];
  return out;
}

class GeneratorSearch {
 public:
  GeneratorSearch(const GroupTable& g, const GroupTable& h)
      : g_(g), h_(h), gens_(generating_set(g)), images_(gens_.size()) {
    const auto og = element_orders(g);
    const auto oh = element_orders(h);
    const auto cg = centralizer_sizes(g);
    const auto ch = centralizer_sizes(h);
    for (ElementIndex s : gens_) {
      std::vector<ElementIndex> cands;
      for (ElementIndex y = 0; y < h.order(); ++y)
        if (oh[y] == og[s] && ch[y] == cg[s]) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  std::optional<Isomorphism> run() {
    if (!search(0)) return std::nullopt;
    Isomorphism out(phi_.begin(), phi_.end());
    return out;
  }

 private:
  // Rebuilds phi on <gens_[0..t)> by walking the Cayley graph; fails on a
  // conflicting image or a collision in H.
  bool propagate(std::size_t t) {
    constexpr ElementIndex kUnset = ~ElementIndex{0};
    phi_.assign(g_.order(), kUnset);
    used_.assign(h_.order(), 0);
    phi_[g_.identity()] = h_.identity();
    used_[h_.identity()] = 1;
    std::vector<ElementIndex> queue{g_.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const ElementIndex x = queue[head];
      for (std::size_t j = 0; j < t; ++j) {
        const ElementIndex y = g_.multiply(x, gens_[j]);
        const ElementIndex image = h_.multiply(phi_[x], images_[j]);
        if (phi_[y] == kUnset) {
          if (used_[image]) return false;
          phi_[y] = image;
          used_[image] = 1;
          queue.push_back(y);
        } else if (phi_[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t t) {
    if (t == gens_.size()) return propagate(t);
    for (ElementIndex cand : candidates_[t]) {
      images_[t] = cand;
      if (propagate(t + 1) && search(t + 1)) return true;
    }
    return false;
  }

  const GroupTable& g_;
  const GroupTable& h_;
  std::vector<ElementIndex> gens_;
  std::vector<ElementIndex> images_;
  std::vector<std::vector<ElementIndex>> candidates_;
  std::vector<ElementIndex> phi_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw std::length_error("isomorphism search limited to order " + std::to_string(kMaxIsomorphismOrder));
  }
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  auto witness = GeneratorSearch(g, h).run();
  if (witness && !verify_isomorphism(g, h, *witness)) {
    throw std::logic_error("isomorphism search produced an invalid witness");
  }
  return witness;
}

}  // namespace clifford
