#pragma once

// Gamma-matrix representations of Cl(p,q) over Z[i]: the Brauer-Weyl tensor
// construction, a handful of fixed bases, blade evaluation and intertwiners.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifford/blade.hpp"
#include "clifford/gaussian.hpp"

namespace clifford {

/// Pairs (i, j), 1-based with i <= j, where g_i g_j + g_j g_i != 2 g_ij I.
std::vector<std::pair<int, int>> clifford_relation_defects(const AlgebraSignature& sig,
                                                           const std::vector<GaussianMatrix>& gammas);

class GammaBasis {
 public:
  /// Checks the Clifford relations; throws std::invalid_argument listing the
  /// failing pairs. `first_label` is the printed index of generator 1 (0 for
  /// bases written g0..g3, 1 otherwise).
  GammaBasis(std::string name, AlgebraSignature sig, std::vector<GaussianMatrix> gammas,
             int first_label = 1);

  const std::string& name() const { return name_; }
  const AlgebraSignature& signature() const { return sig_; }
  std::size_t dim() const { return gammas_.front().dim(); }
  const std::vector<GaussianMatrix>& gammas() const { return gammas_; }
  /// 1-based generator index.
  const GaussianMatrix& gamma(int generator) const;
  int first_label() const { return first_label_; }

  /// Free-form metadata (ring class, fixture notes).
  const std::string& note() const { return note_; }
  void set_note(std::string note) { note_ = std::move(note); }

 private:
  std::string name_;
  AlgebraSignature sig_;
  std::vector<GaussianMatrix> gammas_;
  int first_label_;
  std::string note_;
};

/// Blade written with the basis' own generator labels: "I", "g13", "-g0123",
/// "i*g5", "g{1,2,10}".
std::string gamma_label(const GammaBasis& basis, const SignedBlade& blade);

/// Tensor-product (Brauer-Weyl) basis. n = 2m or 2m+1 with m >= 1, else
/// std::invalid_argument. The last q generators carry a factor i.
GammaBasis brauer_weyl_basis(const AlgebraSignature& sig);

/// The m Hermitian pairs plus, for odd n, the sigma_3^m generator, all
/// squaring to +1 (before any i-scaling).
std::vector<GaussianMatrix> brauer_weyl_hermitian(int n);

/// "canonical", "weyl", "majorana" (signature (1,3)), "majorana31" (3,1),
/// "sitter" (4,1). Throws std::invalid_argument for other names.
GammaBasis fixture_basis(const std::string& name);
const std::vector<std::string>& fixture_names();

/// phase * product of the gammas in ascending index order.
GaussianMatrix rep_of_blade(const GammaBasis& basis, const SignedBlade& blade);

/// A g^from_i = g^to_i A for every generator. Throws std::invalid_argument on
/// a dimension or signature mismatch and std::domain_error if A is singular.
bool verify_intertwiner(const GaussianMatrix& a, const GammaBasis& from, const GammaBasis& to);

/// Generators i (1-based) where the intertwining relation fails.
std::vector<int> intertwiner_defects(const GaussianMatrix& a, const GammaBasis& from, const GammaBasis& to);

/// An invertible A with A g^from_i = g^to_i A, by averaging seed matrices
/// over the group; content-reduced so its entries are coprime.
std::optional<GaussianMatrix> construct_intertwiner(const GammaBasis& from, const GammaBasis& to);

/// The unit-phase blade whose matrix equals m. Real phases are preferred,
/// then the smallest mask (odd n has two candidates per matrix).
std::optional<SignedBlade> identify_blade(const GammaBasis& basis, const GaussianMatrix& m);

/// Unnormalized block matrix [[1,-1],[1,1]] relating the canonical and Weyl bases.
GaussianMatrix intertwiner_x();
/// Unnormalized block matrix [[1,i],[eps,-i*eps]] relating the Majorana and Weyl bases.
GaussianMatrix intertwiner_y(int epsilon);

struct EpsilonScan {
  std::vector<int> valid;  // epsilons for which Y intertwines majorana -> weyl
  std::string note;
};

/// Tries eps = +1 and -1.
EpsilonScan scan_y_epsilon();

}  // namespace clifford
