#include "clifford/automorphism.hpp"

#include <map>

namespace clifford {

namespace {

constexpr const char* kKeyNames[8] = {"I", "W", "E", "C", "Pi", "K", "S", "F"};
constexpr const char* kMapNames[8] = {"id", "star", "rev", "rev*star", "bar", "bar*star", "bar*rev", "bar*rev*star"};

int key_index(AutKey k) { return static_cast<int>(k); }

// Unit phase c with a == c*b, if any.
std::optional<Phase> unit_ratio(const GaussianMatrix& a, const GaussianMatrix& b) {
  const auto c = proportionality(a, b);
  if (!c) return std::nullopt;
  return c->as_phase();
}

// Sign of m*m = +-I, else nullopt.
std::optional<int> square_sign(const GaussianMatrix& m) {
  const auto c = schur_scalar(m * m);
  if (!c) return std::nullopt;
  if (*c == Gaussian{1}) return 1;
  if (*c == Gaussian{-1}) return -1;
  return std::nullopt;
}

template <typename Constraint>
BladeSolution solve_blade_constraint(const GammaBasis& basis, Constraint holds, const char* what) {
  const AlgebraSignature& sig = basis.signature();
  std::vector<std::pair<BladeMask, GaussianMatrix>> hits;
  for (BladeMask s = 0; s <= sig.full_mask(); ++s) {
    GaussianMatrix m = rep_of_blade(basis, {Phase::one(), s});
    bool ok = true;
    for (int g = 1; g <= sig.n() && ok; ++g) ok = holds(m, basis.gamma(g));
    if (ok) hits.emplace_back(s, std::move(m));
  }
  if (hits.empty()) throw SolverError(std::string(what) + ": no blade matrix satisfies the constraints");
  for (const auto& [mask, m] : hits) {
    if (!proportionality(m, hits.front().second)) {
      throw SolverError(std::string(what) + ": non-proportional solutions " +
                        gamma_label(basis, {Phase::one(), hits.front().first}) + " and " +
                        gamma_label(basis, {Phase::one(), mask}) + " (reducible basis?)");
    }
  }
  return {{Phase::one(), hits.front().first}, hits.front().second, hits.size()};
}

}  // namespace

std::string to_string(AutKey key) { return kKeyNames[key_index(key)]; }

std::optional<AutKey> parse_aut_key(const std::string& s) {
  for (int k = 0; k < 8; ++k)
    if (s == kKeyNames[k]) return static_cast<AutKey>(k);
  return std::nullopt;
}

std::string map_name(AutKey key) { return kMapNames[key_index(key)]; }

SignedBlade apply_map(AutKey key, const SignedBlade& b) {
  const int bits = key_index(key);
  SignedBlade out = b;
  if (bits & 1) out = grade_involution(out);
  if (bits & 2) out = reversion(out);
  if (bits & 4) out = pseudo_conjugation(out);
  return out;
}

std::array<std::array<AutKey, 8>, 8> map_composition_table(const AlgebraSignature& sig) {
  std::vector<SignedBlade> probes;
  for (BladeMask s = 0; s <= sig.full_mask(); ++s) {
    probes.push_back({Phase::one(), s});
    probes.push_back({Phase::i(), s});
  }
  std::array<std::array<AutKey, 8>, 8> out{};
  for (AutKey a : kAutKeys) {
    for (AutKey b : kAutKeys) {
      std::optional<AutKey> found;
      for (AutKey k : kAutKeys) {
        bool same = true;
        for (const auto& x : probes) {
          if (apply_map(a, apply_map(b, x)) != apply_map(k, x)) {
            same = false;
            break;
          }
        }
        if (same) {
          if (found) throw std::logic_error("blade maps are not distinguished by the probes; need n >= 2");
          found = k;
        }
      }
      if (!found) throw std::logic_error("composition of blade maps left the set");
      out[key_index(a)][key_index(b)] = *found;
    }
  }
  return out;
}

BladeSolution solve_transpose_symmetry(const GammaBasis& basis) {
  return solve_blade_constraint(
      basis, [](const GaussianMatrix& m, const GaussianMatrix& g) { return m * g.transpose() == g * m; },
      "transpose symmetry");
}

BladeSolution solve_complex_conjugation(const GammaBasis& basis) {
  const AlgebraSignature& sig = basis.signature();
  if (sig.n() % 2 == 1) {
    // M w^* M^-1 = w is forced by the generator relations; w is scalar here.
    const auto c = schur_scalar(rep_of_blade(basis, volume_element(sig)));
    if (c && c->conj() != *c) {
      throw SolverError("complex conjugation: the volume matrix is " + to_string(*c) +
                        "*I, conjugation sends it to " + to_string(c->conj()) +
                        "*I, so no matrix satisfies M g_i^* M^-1 = g_i for all i");
    }
  }
  return solve_blade_constraint(
      basis, [](const GaussianMatrix& m, const GaussianMatrix& g) { return m * g.conjugate() == g * m; },
      "complex conjugation");
}

StarMatrix star_matrix(const GammaBasis& basis) {
  const AlgebraSignature& sig = basis.signature();
  StarMatrix out{rep_of_blade(basis, volume_element(sig)), sig.n() % 2 == 0};
  if (out.inner_star) {
    for (int g = 1; g <= sig.n(); ++g) {
      if (out.matrix * basis.gamma(g) != -(basis.gamma(g) * out.matrix)) {
        throw std::logic_error("volume matrix does not anticommute with generator " + std::to_string(g));
      }
    }
  } else if (!schur_scalar(out.matrix)) {
    throw std::logic_error("odd-n volume matrix is not scalar");
  }
  return out;
}

std::string signature_string(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

OrderStructure signed_order_structure(const SignedTable& t) {
  OrderStructure s;
  for (std::size_t r = 1; r < t.size(); ++r) {
    const SignedCell& sq = t.at(r, r);
    if (sq.index != 0 || !sq.phase.is_real()) {
      throw std::domain_error("representative " + t.labels[r] + " does not square to +-identity");
    }
    (sq.phase == Phase::one() ? s.involutions : s.order4)++;
  }
  return s;
}

ExtGroup derive_ext_group(const GammaBasis& basis) {
  ExtGroup ext = assemble_ext_group(basis, solve_complex_conjugation(basis).matrix);
  ext.pi_solved = true;
  return ext;
}

ExtGroup assemble_ext_group(const GammaBasis& basis, const GaussianMatrix& pi_matrix) {
  if (pi_matrix.dim() != basis.dim()) throw std::invalid_argument("Pi has the wrong size");
  const StarMatrix w = star_matrix(basis);
  const BladeSolution e = solve_transpose_symmetry(basis);

  std::array<GaussianMatrix, 8> mats;
  mats[0] = GaussianMatrix::identity(basis.dim());
  mats[1] = w.matrix;
  mats[2] = e.matrix;
  mats[3] = mats[2] * mats[1];  // C = EW
  mats[4] = pi_matrix;
  mats[5] = mats[4] * mats[1];  // K = Pi W
  mats[6] = mats[4] * mats[2];  // S = Pi E
  mats[7] = mats[4] * mats[3];  // F = Pi C

  std::array<SignedBlade, 8> blades;
  for (int k = 0; k < 8; ++k) {
    const auto b = identify_blade(basis, mats[k]);
    if (!b) throw std::logic_error("matrix " + std::string(kKeyNames[k]) + " is not a blade matrix");
    blades[k] = *b;
  }

  SignedTable table;
  for (int k = 0; k < 8; ++k) table.labels.emplace_back(kKeyNames[k]);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const GaussianMatrix prod = mats[a] * mats[b];
      // For odd n W is scalar and the eight matrices agree up to i; a real
      // ratio picks the right key.
      std::optional<SignedCell> cell;
      for (int k = 0; k < 8 && !cell; ++k) {
        const auto ph = unit_ratio(prod, mats[k]);
        if (ph && ph->is_real()) cell = SignedCell{static_cast<std::uint32_t>(k), *ph};
      }
      for (int k = 0; k < 8 && !cell; ++k) {
        if (auto ph = unit_ratio(prod, mats[k])) cell = SignedCell{static_cast<std::uint32_t>(k), *ph};
      }
      if (!cell) throw std::logic_error("Ext matrices do not close under multiplication");
      table.cells.push_back(*cell);
    }
  }

  std::vector<int> signature;
  for (int k = 1; k < 8; ++k) {
    const auto s = square_sign(mats[k]);
    if (!s) throw std::logic_error(std::string(kKeyNames[k]) + " does not square to +-I");
    signature.push_back(*s);
  }
  return {basis, mats, blades, std::move(table), std::move(signature), w.inner_star, false};
}

GeneratingGroup generating_group_from_ptc(const GaussianMatrix& p, const GaussianMatrix& t,
                                          const GaussianMatrix& c) {
  if (p.dim() != t.dim() || p.dim() != c.dim()) throw std::invalid_argument("P, T, C differ in size");
  GeneratingGroup out;
  out.words = {GaussianMatrix::identity(p.dim()), p, t, p * t, c, c * p, c * t, c * p * t};
  static constexpr const char* kWordNames[8] = {"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};

  for (int k = 1; k < 8; ++k) {
    const auto s = square_sign(out.words[k]);
    if (!s) throw std::invalid_argument(std::string(kWordNames[k]) + " does not square to +-I");
    out.signature.push_back(*s);
    (*s > 0 ? out.order_structure.involutions : out.order_structure.order4)++;
  }

  // Representatives: first word of each class up to sign.
  std::vector<int> reps;
  for (int k = 0; k < 8; ++k) {
    bool seen = false;
    for (int r : reps) {
      const auto ph = unit_ratio(out.words[k], out.words[r]);
      if (ph && ph->is_real()) seen = true;
    }
    if (!seen) reps.push_back(k);
  }
  out.degenerate = reps.size() < 8;
  for (int r : reps) out.table.labels.emplace_back(kWordNames[r]);
  for (int a : reps) {
    for (int b : reps) {
      const GaussianMatrix prod = out.words[a] * out.words[b];
      std::optional<SignedCell> cell;
      for (std::size_t k = 0; k < reps.size() && !cell; ++k) {
        const auto ph = unit_ratio(prod, out.words[reps[k]]);
        if (ph && ph->is_real()) cell = SignedCell{static_cast<std::uint32_t>(k), *ph};
      }
      if (!cell) {
        throw std::invalid_argument(std::string(kWordNames[a]) + "*" + kWordNames[b] +
                                    " is not +- one of the eight words");
      }
      out.table.cells.push_back(*cell);
    }
  }
  return out;
}

namespace {

std::vector<ElementIndex> signed_product_table(const SignedTable& t) {
  const std::size_t m = t.size();
  std::vector<ElementIndex> table(4 * m * m);
  for (std::size_t x = 0; x < 2 * m; ++x) {
    for (std::size_t y = 0; y < 2 * m; ++y) {
      const SignedCell& cell = t.at(x / 2, y / 2);
      if (!cell.phase.is_real()) throw std::invalid_argument("full group needs real phases");
      const std::size_t neg = (x & 1) ^ (y & 1) ^ (cell.phase == Phase::one() ? 0 : 1);
      table[x * 2 * m + y] = static_cast<ElementIndex>(2 * cell.index + neg);
    }
  }
  return table;
}

std::vector<std::string> signed_labels(const SignedTable& t) {
  std::vector<std::string> labels;
  for (const auto& l : t.labels) {
    labels.push_back(l);
    labels.push_back("-" + l);
  }
  return labels;
}

}  // namespace

GroupTable full_cpt_group(const SignedTable& table) {
  return GroupTable(signed_labels(table), signed_product_table(table));
}

GroupTable full_cpt_group(const SignedTable& table, const AlgebraSignature& sig,
                          const std::vector<SignedBlade>& blades) {
  if (blades.size() != table.size()) throw std::invalid_argument("one blade per representative required");
  std::vector<SignedBlade> all;
  for (const auto& b : blades) {
    all.push_back(b);
    all.push_back(-b);
  }
  return GroupTable(signed_labels(table), signed_product_table(table), sig, std::move(all));
}

GroupTable full_cpt_group(const ExtGroup& ext) {
  // Keys equal up to sign (e.g. Pi = I) collapse onto their first key.
  std::array<std::size_t, 8> rep_of{};
  std::array<Phase, 8> sign{};
  std::vector<int> reps;
  for (int k = 0; k < 8; ++k) {
    std::optional<std::size_t> found;
    for (std::size_t r = 0; r < reps.size() && !found; ++r) {
      const auto ph = unit_ratio(ext.mats[k], ext.mats[reps[r]]);
      if (ph && ph->is_real()) {
        found = r;
        sign[k] = *ph;
      }
    }
    if (!found) {
      found = reps.size();
      reps.push_back(k);
      sign[k] = Phase::one();
    }
    rep_of[k] = *found;
  }
  SignedTable reduced;
  std::vector<SignedBlade> blades;
  for (int r : reps) {
    reduced.labels.push_back(ext.table.labels[r]);
    blades.push_back(ext.blades[r]);
  }
  for (int a : reps) {
    for (int b : reps) {
      const SignedCell& cell = ext.table.at(a, b);
      reduced.cells.push_back({static_cast<std::uint32_t>(rep_of[cell.index]), cell.phase * sign[cell.index]});
    }
  }
  return full_cpt_group(reduced, ext.basis.signature(), blades);
}

bool is_subgroup_of(const GroupTable& h, const GroupTable& g) {
  if (!h.has_blades() || !g.has_blades()) throw std::invalid_argument("subgroup test needs blade-labelled groups");
  if (*h.signature() != *g.signature()) throw std::invalid_argument("groups live in different algebras");
  std::map<std::pair<int, BladeMask>, ElementIndex> where;
  for (ElementIndex x = 0; x < g.order(); ++x) where[{g.blades()[x].phase.exponent(), g.blades()[x].mask}] = x;

  std::vector<ElementIndex> embed(h.order());
  std::vector<std::uint8_t> used(g.order(), 0);
  for (ElementIndex x = 0; x < h.order(); ++x) {
    const auto it = where.find({h.blades()[x].phase.exponent(), h.blades()[x].mask});
    if (it == where.end() || used[it->second]++) return false;
    embed[x] = it->second;
  }
  for (ElementIndex a = 0; a < h.order(); ++a)
    for (ElementIndex b = 0; b < h.order(); ++b)
      if (embed[h.multiply(a, b)] != g.multiply(embed[a], embed[b])) return false;
  return true;
}

}  // namespace clifford
