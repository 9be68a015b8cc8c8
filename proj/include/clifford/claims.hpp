#pragma once

// Registry of reproducible statements about the groups, bases and CPT
// structures, and the harness that evaluates them.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clifford/gamma.hpp"

namespace clifford {

enum class ClaimStatus { match, mismatch, paper_typo_suspected };

/// "match", "mismatch", "paper-typo-suspected".
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string computed;
  ClaimStatus status = ClaimStatus::mismatch;
  std::string oracle;  // independent recomputation, for typo-suspected entries
};

struct Claim {
  std::string id;
  std::string description;
  std::string anchor;    // neutral locator of the statement
  std::string expected;  // literal reference value
  std::function<ClaimResult()> check;
};

/// All claims, in registry order. Ids are unique.
const std::vector<Claim>& claim_registry();

/// Ids the acceptance suite relies on; the registry must contain them all.
std::vector<std::string> acceptance_claim_ids();

struct ReportEntry {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  ClaimStatus status;
  std::string oracle;
};

struct Report {
  std::vector<ReportEntry> entries;

  std::size_t count(ClaimStatus s) const;
  /// No entry is a mismatch (typo-suspected entries do not fail the run).
  bool ok() const { return count(ClaimStatus::mismatch) == 0; }
};

/// Runs every claim whose id starts with `prefix`, in registry order.
/// Exceptions inside a check become mismatch entries.
Report run_all_checks(std::string_view prefix = {}, bool parallel = false);

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r);

/// Blade for a reference token: "I", "w", "-013", digits in product order
/// using the basis' printed labels.
SignedBlade parse_gamma_word(const GammaBasis& basis, const std::string& token);

}  // namespace clifford
