#include "clifford/gamma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clifford {

namespace {

GaussianMatrix block(const GaussianMatrix& a, const GaussianMatrix& b, const GaussianMatrix& c,
                     const GaussianMatrix& d) {
  const std::size_t h = a.dim();
  GaussianMatrix out(2 * h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t col = 0; col < h; ++col) {
      out(r, col) = a(r, col);
      out(r, col + h) = b(r, col);
      out(r + h, col) = c(r, col);
      out(r + h, col + h) = d(r, col);
    }
  }
  return out;
}

GaussianMatrix kron_power(const GaussianMatrix& m, int times) {
  GaussianMatrix out = GaussianMatrix::identity(1);
  for (int t = 0; t < times; ++t) out = kron(out, m);
  return out;
}

std::string digits(const std::vector<int>& idx) {
  const bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i >= 10; });
  std::string s = wide ? "{" : "";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k) s += ",";
    s += std::to_string(idx[k]);
  }
  return wide ? s + "}" : s;
}

}  // namespace

std::vector<std::pair<int, int>> clifford_relation_defects(const AlgebraSignature& sig,
                                                           const std::vector<GaussianMatrix>& gammas) {
  std::vector<std::pair<int, int>> bad;
  const std::size_t d = gammas.front().dim();
  for (int i = 1; i <= sig.n(); ++i) {
    for (int j = i; j <= sig.n(); ++j) {
      const auto& a = gammas[i - 1];
      const auto& b = gammas[j - 1];
      const GaussianMatrix anti = a * b + b * a;
      const GaussianMatrix want =
          i == j ? GaussianMatrix::scalar(d, Gaussian{2 * sig.square_sign(i)}) : GaussianMatrix(d);
      if (anti != want) bad.emplace_back(i, j);
    }
  }
  return bad;
}

GammaBasis::GammaBasis(std::string name, AlgebraSignature sig, std::vector<GaussianMatrix> gammas,
                       int first_label)
    : name_(std::move(name)), sig_(sig), gammas_(std::move(gammas)), first_label_(first_label) {
  if (static_cast<int>(gammas_.size()) != sig_.n()) {
    throw std::invalid_argument(name_ + ": expected " + std::to_string(sig_.n()) + " gamma matrices");
  }
  const std::size_t d = gammas_.front().dim();
  if (!std::has_single_bit(d)) throw std::invalid_argument(name_ + ": dimension is not a power of two");
  for (const auto& g : gammas_) {
    if (g.dim() != d) throw std::invalid_argument(name_ + ": gamma matrices differ in size");
  }
  const auto bad = clifford_relation_defects(sig_, gammas_);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << name_ << ": Clifford relation fails for";
    for (auto [i, j] : bad) msg << " (" << i << "," << j << ")";
    throw std::invalid_argument(msg.str());
  }
  note_ = "Cl(" + std::to_string(sig_.p()) + "," + std::to_string(sig_.q()) + ") = " +
          to_string(matrix_algebra_class(sig_));
}

const GaussianMatrix& GammaBasis::gamma(int generator) const {
  if (generator < 1 || generator > sig_.n()) throw std::out_of_range("generator index out of range");
  return gammas_[generator - 1];
}

std::string gamma_label(const GammaBasis& basis, const SignedBlade& blade) {
  std::string prefix;
  switch (blade.phase.exponent()) {
    case 1: prefix = "i*"; break;
    case 2: prefix = "-"; break;
    case 3: prefix = "-i*"; break;
    default: break;
  }
  if (blade.mask == 0) {
    if (blade.phase == Phase::i()) return "i";
    if (blade.phase == Phase::minus_i()) return "-i";
    return prefix + "I";
  }
  std::vector<int> idx = blade.indices();
  for (int& i : idx) i += basis.first_label() - 1;
  return prefix + "g" + digits(idx);
}

std::vector<GaussianMatrix> brauer_weyl_hermitian(int n) {
  const int m = n / 2;
  if (m < 1) throw std::invalid_argument("Brauer-Weyl construction needs n >= 2");
  const GaussianMatrix id = pauli(0);
  std::vector<GaussianMatrix> out;
  for (int sigma : {1, 2}) {
    for (int j = 1; j <= m; ++j) {
      out.push_back(kron(kron(kron_power(pauli(3), j - 1), pauli(sigma)), kron_power(id, m - j)));
    }
  }
  if (n % 2 == 1) out.push_back(kron_power(pauli(3), m));
  return out;
}

GammaBasis brauer_weyl_basis(const AlgebraSignature& sig) {
  auto gammas = brauer_weyl_hermitian(sig.n());
  for (int g = sig.p(); g < sig.n(); ++g) gammas[g] = gammas[g] * Gaussian::i();
  GammaBasis basis("brauer-weyl(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) + ")", sig,
                   std::move(gammas));
  return basis;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"canonical", "weyl", "majorana", "majorana31", "sitter"};
  return names;
}

GammaBasis fixture_basis(const std::string& name) {
  const Gaussian i = Gaussian::i();
  const GaussianMatrix one = pauli(0), zero(2);
  const GaussianMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  const AlgebraSignature minkowski(1, 3);

  // g_k = [[0, s_k], [-s_k, 0]] is shared by the canonical and Weyl bases.
  auto spatial = [&](const GaussianMatrix& s) { return block(zero, s, -s, zero); };

  if (name == "canonical") {
    GammaBasis b(name, minkowski, {block(-one, zero, zero, one), spatial(s1), spatial(s2), spatial(s3)}, 0);
    b.set_note(b.note() + "; complex 4x4 spinors");
    return b;
  }
  if (name == "weyl") {
    GammaBasis b(name, minkowski, {block(zero, one, one, zero), spatial(s1), spatial(s2), spatial(s3)}, 0);
    b.set_note(b.note() + "; chiral blocks");
    return b;
  }
  if (name == "majorana") {
    GammaBasis b(name, minkowski,
                 {block(zero, -s2, -s2, zero), block(zero, s3 * i, s3 * i, zero), block(one * i, zero, zero, -one * i),
                  block(zero, -s1 * i, -s1 * i, zero)},
                 0);
    b.set_note(b.note() + "; purely imaginary gammas");
    return b;
  }
  if (name == "majorana31") {
    GaussianMatrix g0{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
    GaussianMatrix g1{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    GaussianMatrix g2{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    GaussianMatrix g3{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    GammaBasis b(name, AlgebraSignature(3, 1), {g0, g1, g2, g3}, 0);
    b.set_note(b.note() + "; real 4x4 spinors");
    return b;
  }
  if (name == "sitter") {
    GammaBasis b(name, AlgebraSignature(4, 1),
                 {kron(s1, one), kron(s3, s1), kron(s2, one), kron(s3, s2), kron(s3, s3) * i});
    b.set_note(b.note() + "; g5 = i s3 x s3");
    return b;
  }
  throw std::invalid_argument("unknown fixture basis '" + name + "'");
}

GaussianMatrix rep_of_blade(const GammaBasis& basis, const SignedBlade& blade) {
  if (!basis.signature().contains(blade.mask)) throw std::out_of_range("blade outside the basis signature");
  GaussianMatrix out = GaussianMatrix::scalar(basis.dim(), Gaussian::from_phase(blade.phase));
  for (int idx : blade.indices()) out = out * basis.gamma(idx);
  return out;
}

std::vector<int> intertwiner_defects(const GaussianMatrix& a, const GammaBasis& from, const GammaBasis& to) {
  if (a.dim() != from.dim() || a.dim() != to.dim()) throw std::invalid_argument("intertwiner dimension mismatch");
  if (from.signature() != to.signature()) throw std::invalid_argument("intertwiner between different signatures");
  if (determinant(a).is_zero()) throw std::domain_error("intertwiner is singular");
  std::vector<int> bad;
  for (int g = 1; g <= from.signature().n(); ++g) {
    if (a * from.gamma(g) != to.gamma(g) * a) bad.push_back(g);
  }
  return bad;
}

bool verify_intertwiner(const GaussianMatrix& a, const GammaBasis& from, const GammaBasis& to) {
  return intertwiner_defects(a, from, to).empty();
}

std::optional<GaussianMatrix> construct_intertwiner(const GammaBasis& from, const GammaBasis& to) {
  if (from.signature() != to.signature() || from.dim() != to.dim()) return std::nullopt;
  const AlgebraSignature& sig = from.signature();
  const std::size_t d = from.dim();

  // +-e_S contribute identically, so summing over masks is enough.
  std::vector<GaussianMatrix> rep_to, rep_from_inv;
  for (BladeMask s = 0; s <= sig.full_mask(); ++s) {
    const SignedBlade b{Phase::one(), s};
    const SignedBlade sq = blade_product(b, b, sig);
    rep_to.push_back(rep_of_blade(to, b));
    rep_from_inv.push_back(rep_of_blade(from, b) * Gaussian::from_phase(sq.phase));  // e_S^{-1} = e_S^2 e_S
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      GaussianMatrix sum(d);
      for (std::size_t s = 0; s < rep_to.size(); ++s) {
        // rep_to * E_jk * rep_from_inv = column j of rep_to times row k of rep_from_inv.
        for (std::size_t r = 0; r < d; ++r) {
          const Gaussian left = rep_to[s](r, j);
          if (left.is_zero()) continue;
          for (std::size_t c = 0; c < d; ++c) sum(r, c) += left * rep_from_inv[s](k, c);
        }
      }
      if (sum.is_zero()) continue;
      std::int64_t g = 0;
      for (const auto& e : sum.entries()) g = std::gcd(g, std::gcd(e.re, e.im));
      GaussianMatrix reduced(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) reduced(r, c) = {sum(r, c).re / g, sum(r, c).im / g};
      if (!determinant(reduced).is_zero()) return reduced;
    }
  }
  return std::nullopt;
}

std::optional<SignedBlade> identify_blade(const GammaBasis& basis, const GaussianMatrix& m) {
  if (m.dim() != basis.dim()) return std::nullopt;
  std::optional<SignedBlade> complex_hit;
  for (BladeMask s = 0; s <= basis.signature().full_mask(); ++s) {
    const auto c = proportionality(m, rep_of_blade(basis, {Phase::one(), s}));
    if (!c) continue;
    const auto phase = c->as_phase();
    if (!phase) continue;
    if (phase->is_real()) return SignedBlade{*phase, s};
    if (!complex_hit) complex_hit = SignedBlade{*phase, s};
  }
  return complex_hit;
}

GaussianMatrix intertwiner_x() {
  const GaussianMatrix one = pauli(0);
  return block(one, -one, one, one);
}

GaussianMatrix intertwiner_y(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  const GaussianMatrix one = pauli(0);
  const Gaussian i = Gaussian::i(), e{epsilon};
  return block(one, one * i, one * e, one * (-i * e));
}

EpsilonScan scan_y_epsilon() {
  const GammaBasis mb = fixture_basis("majorana");
  const GammaBasis wb = fixture_basis("weyl");
  EpsilonScan scan;
  for (int eps : {1, -1}) {
    if (verify_intertwiner(intertwiner_y(eps), mb, wb)) scan.valid.push_back(eps);
  }
  if (scan.valid.empty()) {
    scan.note = "no valid epsilon: Y(+1) and Y(-1) both fail majorana -> weyl";
  } else {
    scan.note = "epsilon = " + std::to_string(scan.valid.front());
  }
  return scan;
}

}  // namespace clifford
