#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include <json.hpp>

#include "cambrep/reptype/certificate.hpp"
#include "cambrep/reptype/invariants.hpp"

namespace cambrep::reptype {

struct SearchOptions {
  int max_cycle_length = 14;
  /// Subsets are tried exhaustively only for posets up to this size.
  int exhaustive_limit = 12;
  /// Hereditary search: only accept a cycle of exactly this length plus one
  /// pendant vertex.
  std::optional<int> target_cycle_length;
  /// Budget of DFS steps for each cycle enumeration.
  std::uint64_t max_steps = 20'000'000;
  /// 0 keeps the natural candidate order; anything else shuffles candidates
  /// of equal cycle length.
  std::uint64_t seed = 0;
};

std::optional<Certificate> hereditary_wild_cert(const Poset& p, const SearchOptions& opt = {});
std::optional<Certificate> square_cycle_cert(const Poset& p, const SearchOptions& opt = {});
std::optional<Certificate> four_regular_cert(const Poset& p);
std::optional<Certificate> star_cert(const Poset& p);
/// Flip / flip-dual sequences up to max_depth ending at a path-unique Dynkin
/// poset, then the rank 2 weak-order citation.
std::optional<Certificate> finite_cert(const Poset& p, int max_depth = 3);
std::optional<Certificate> tame_cube_cert(const Poset& p);

/// Wraps a wild certificate of f.target into one for f.source. Throws
/// std::invalid_argument naming the offending fiber or pair when the
/// hypotheses fail.
Certificate contraction_cert(const poset::PosetMorphism& f, std::shared_ptr<const Certificate> target);

struct ClassifyReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
  Invariants invariants;
};

/// finite -> tame cube -> star -> square cycle -> hereditary -> 4-regular.
/// The first certificate that validates wins.
ClassifyReport classify(const Poset& p, const SearchOptions& opt = {});
nlohmann::json report_to_json(const ClassifyReport& r);

}  // namespace cambrep::reptype
