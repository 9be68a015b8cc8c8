#pragma once

// Spinor matrices of the eight (anti/pseudo)automorphisms of Cl(p,q) and the
// discrete groups they generate.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifford/finite_group.hpp"
#include "clifford/gamma.hpp"

namespace clifford {

/// Matrix keys. The index is a bit pattern: bit 0 = star (W), bit 1 =
/// reversion (E), bit 2 = complex conjugation (Pi); C = EW, K = Pi W,
/// S = Pi E, F = Pi C.
enum class AutKey : int { I = 0, W = 1, E = 2, C = 3, Pi = 4, K = 5, S = 6, F = 7 };

inline constexpr std::array<AutKey, 8> kAutKeys{AutKey::I,  AutKey::W, AutKey::E, AutKey::C,
                                                AutKey::Pi, AutKey::K, AutKey::S, AutKey::F};

/// "I", "W", "E", "C", "Pi", "K", "S", "F".
std::string to_string(AutKey key);
std::optional<AutKey> parse_aut_key(const std::string& s);

/// Name of the blade map the key realizes: "id", "star", "rev", "rev*star",
/// "bar", "bar*star", "bar*rev", "bar*rev*star".
std::string map_name(AutKey key);

/// Applies the blade map of `key` (grade involution, reversion and phase
/// conjugation per its bits).
SignedBlade apply_map(AutKey key, const SignedBlade& b);

/// Composition table of the eight blade maps, identified by their action on
/// every blade of `sig` with phases 1 and i. Entry [a][b] = a after b.
std::array<std::array<AutKey, 8>, 8> map_composition_table(const AlgebraSignature& sig);

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BladeSolution {
  SignedBlade blade;       // smallest mask of the solution class, phase +1
  GaussianMatrix matrix;   // rep_of_blade(basis, blade)
  std::size_t blade_hits;  // blades satisfying the constraints (2 per class for odd n)
};

/// M with M g_i^T = g_i M for every generator, searched over all 2^n blade
/// matrices. Throws SolverError unless the solutions form exactly one
/// proportionality class.
BladeSolution solve_transpose_symmetry(const GammaBasis& basis);

/// Same for M g_i^* = g_i M. For odd n the volume matrix is c*I and any
/// solution needs conj(c) = c; otherwise SolverError explains the obstruction.
BladeSolution solve_complex_conjugation(const GammaBasis& basis);

struct StarMatrix {
  GaussianMatrix matrix;  // rep of the volume blade
  bool inner_star;        // W g_i W^-1 = -g_i holds (even n); false for odd n, where W is scalar
};

StarMatrix star_matrix(const GammaBasis& basis);

struct SignedCell {
  std::uint32_t index = 0;
  Phase phase;
  friend bool operator==(const SignedCell&, const SignedCell&) = default;
};

/// m x m table of representatives with phased entries: rep[r] rep[c] =
/// phase * rep[index].
struct SignedTable {
  std::vector<std::string> labels;
  std::vector<SignedCell> cells;  // row-major

  std::size_t size() const { return labels.size(); }
  const SignedCell& at(std::size_t r, std::size_t c) const { return cells[r * size() + c]; }
};

/// "+-+..." squares of entries 1..m-1 (each must square to +-identity).
std::string signature_string(const std::vector<int>& signs);

/// Involution / order-4 counts among representatives other than the
/// identity, read as: squares to +1 / squares to -1.
OrderStructure signed_order_structure(const SignedTable& t);

struct ExtGroup {
  GammaBasis basis;
  std::array<GaussianMatrix, 8> mats;
  std::array<SignedBlade, 8> blades;  // mats[k] == rep_of_blade(basis, blades[k])
  SignedTable table;                  // indices are AutKey values
  std::vector<int> signature;         // squares of W, E, C, Pi, K, S, F
  bool inner_star;
  bool pi_solved;                     // false when Pi was supplied by the caller

  const GaussianMatrix& mat(AutKey k) const { return mats[static_cast<int>(k)]; }
  const SignedBlade& blade(AutKey k) const { return blades[static_cast<int>(k)]; }
};

/// W, E and Pi from the solvers, the rest from the product definitions.
/// Propagates SolverError (e.g. no Pi exists for odd n when the volume
/// matrix is not real).
ExtGroup derive_ext_group(const GammaBasis& basis);

/// Same, with the given Pi matrix instead of solving for it.
ExtGroup assemble_ext_group(const GammaBasis& basis, const GaussianMatrix& pi);

struct GeneratingGroup {
  std::array<GaussianMatrix, 8> words;  // 1, P, T, PT, C, CP, CT, CPT
  SignedTable table;                    // over the distinct words up to sign
  std::vector<int> signature;           // squares of P, T, PT, C, CP, CT, CPT
  OrderStructure order_structure;
  bool degenerate;                      // fewer than 8 distinct words
};

/// Throws std::invalid_argument if some product leaves +-{words}, or a word
/// does not square to +-I.
GeneratingGroup generating_group_from_ptc(const GaussianMatrix& p, const GaussianMatrix& t,
                                          const GaussianMatrix& c);

/// {+-x : x in table}: element 2k is +x_k, 2k+1 is -x_k. Phases must be
/// real. With blades (one per representative) the result is blade-labelled.
GroupTable full_cpt_group(const SignedTable& table);
GroupTable full_cpt_group(const SignedTable& table, const AlgebraSignature& sig,
                          const std::vector<SignedBlade>& blades);

/// Full group of an Ext group, labelled by the Ext blades.
GroupTable full_cpt_group(const ExtGroup& ext);

/// Whether the blade labels of h embed it injectively and homomorphically in
/// g. Both groups must carry blades of the same signature.
bool is_subgroup_of(const GroupTable& h, const GroupTable& g);

}  // namespace clifford
