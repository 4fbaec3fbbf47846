#pragma once

#include <string>

#include <json.hpp>

#include "cambrep/poset/poset.hpp"

namespace cambrep::poset {

/// {"labels": [...], "covers": [[i, j], ...]} with i covered by j.
nlohmann::json to_json(const Poset& p);
/// Accepts any acyclic cover list; throws std::invalid_argument on a
/// malformed document and CycleError on a cyclic one.
Poset poset_from_json(const nlohmann::json& doc);

/// Hasse diagram in Graphviz syntax, edges pointing upward, one per cover in
/// the order of covers().
std::string to_dot(const Poset& p, const std::string& name = "poset");

}  // namespace cambrep::poset
