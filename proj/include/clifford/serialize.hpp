#pragma once

// JSON forms shared by the CLI and the verification report.

#include <json.hpp>

#include "clifford/automorphism.hpp"
#include "clifford/finite_group.hpp"
#include "clifford/gamma.hpp"

namespace clifford {

/// {order, elements, table}
nlohmann::json to_json(const GroupTable& g);
/// Inverse of to_json (labels only; blades are not serialized).
GroupTable group_from_json(const nlohmann::json& j);

/// [[re, im], ...] rows
nlohmann::json to_json(const GaussianMatrix& m);
GaussianMatrix matrix_from_json(const nlohmann::json& j);

/// {name, p, q, dim, gammas}
nlohmann::json to_json(const GammaBasis& b);
/// Re-validates the Clifford relations.
GammaBasis basis_from_json(const nlohmann::json& j);

/// {basis, keys, blade_labels, table: [[{key, phase}]], signature, inner_star}
nlohmann::json to_json(const ExtGroup& ext);

nlohmann::json to_json(const SignedTable& t);

}  // namespace clifford
