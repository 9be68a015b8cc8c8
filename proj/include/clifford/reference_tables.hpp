#pragma once

// Reference multiplication tables transcribed literally, including their
// misprints. Cells that disagree with recomputation are pinned explicitly.

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace clifford {

/// 8 x 8 table of signed gamma words. Tokens: "I", "w" (volume element),
/// index digits written in product order ("20" is g2 g0), optional leading '-'.
struct ReferenceTable {
  std::string basis;  // fixture the digits refer to
  std::array<std::string, 8> header;
  std::array<std::array<std::string, 8>, 8> cells;
  std::vector<std::pair<int, int>> pinned;  // (row, col) known to disagree
};

/// Generating group {1, P, T, PT, C, CP, CT, CPT} with P = g0, T = g13, C = g20.
const ReferenceTable& ptc_reference_table();
/// Ext group of the canonical Cl(1,3) basis.
const ReferenceTable& ext13_reference_table();
/// Ext group of the Cl(4,1) spinbasis.
const ReferenceTable& ext41_reference_table();

/// Abstract order-8 table over {1, P, T, PT, C, CP, CT, CPT}.
const std::array<std::array<std::string, 8>, 8>& cpt_abstract_reference();
inline constexpr std::array<const char*, 8> kCptWords{"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};

/// Composition table of the eight blade maps, by map_name().
const std::array<std::array<std::string, 8>, 8>& map_reference();
const std::vector<std::pair<int, int>>& map_reference_pinned();

}  // namespace clifford
