#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cambrep/coxeter/group.hpp"
#include "cambrep/poset/constructions.hpp"

namespace cambrep::rootposets {

using poset::Elem;

/// Positive roots ordered by alpha <= beta iff beta - alpha is a nonnegative
/// combination of simple roots. Fixture-backed root posets have no
/// coordinates.
struct RootPoset {
  poset::Poset poset;
  std::vector<std::vector<int>> coords;  // simple-root coordinates per element
  std::vector<Elem> simples;             // the minimal elements, in generator order
};

/// Root poset of a product of A_n, B_n, C_n factors (rank <= 4 each).
/// Throws std::invalid_argument for non-crystallographic factors.
RootPoset root_poset(const coxeter::CoxeterType& type);

/// Loads {"labels": [...], "covers": [[i, j], ...], "simples": [...]}.
/// The designated simples must be exactly the minimal elements.
RootPoset load_root_poset_fixture(const nlohmann::json& doc);
nlohmann::json root_poset_to_json(const RootPoset& rp);

/// Two simple roots and a root beta covering exactly those two.
struct BetaPattern {
  Elem alpha1;
  Elem alpha2;
  Elem beta;
};

/// First beta (in element order) whose lower covers are exactly two simple
/// roots; nullopt if there is none.
std::optional<BetaPattern> find_beta_certificate(const RootPoset& rp);
/// True iff `pattern` satisfies the defining condition on rp.
bool check_beta_pattern(const RootPoset& rp, const BetaPattern& pattern);

/// Order-ideal lattice of a root poset, with helpers to locate L(S).
struct NonNesting {
  RootPoset roots;
  poset::IdealLattice ideals;

  /// Element of the lattice equal to the ideal generated by `generators`.
  /// Throws std::out_of_range if no such element exists.
  Elem ideal_of(const std::vector<Elem>& generators) const;
};

NonNesting nonnesting(const coxeter::CoxeterType& type);
NonNesting nonnesting(RootPoset roots);

/// {L(a1), L(a2), L(a3), L(a1,a2), L(a1,a3), L(a2,a3), L(beta)} for a rank 3
/// root poset with a beta pattern; a1, a2 are the pattern's simples.
std::vector<Elem> nonnesting_rank3_wild_subset(const NonNesting& nn, const BetaPattern& pattern);

/// Elements of the lattice that are ideals contained in L(simples).
std::vector<Elem> simple_cube(const NonNesting& nn);

}  // namespace cambrep::rootposets
