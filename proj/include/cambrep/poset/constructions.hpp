#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cambrep/poset/poset.hpp"

namespace cambrep::poset {

/// k elements 0 < 1 < ... < k-1.
Poset chain(int k);
Poset antichain(int k);
/// Boolean lattice of subsets of an n-set, elements labelled by bit strings.
Poset cube(int n);

/// Componentwise order on pairs; element (i, j) has index i * |q| + j.
Poset product(const Poset& p, const Poset& q);
Poset disjoint_union(const Poset& p, const Poset& q);
Poset dual(const Poset& p);
Poset add_bottom(const Poset& p, const std::string& label = "bottom");
Poset add_top(const Poset& p, const std::string& label = "top");

/// Thrown when a construction needs a unique extremal element.
class NotBoundedError : public std::invalid_argument {
 public:
  NotBoundedError(const std::string& what, std::vector<Elem> extremal);
  const std::vector<Elem>& extremal() const { return extremal_; }

 private:
  std::vector<Elem> extremal_;
};

/// Removes the unique maximum and adjoins a new global minimum (labelled
/// "0^"). The new element gets the last index. Throws NotBoundedError when
/// the maximum is not unique, carrying the maximal antichain.
Poset flip_flop(const Poset& p);
/// Removes the unique minimum and adjoins a new global maximum ("1^").
Poset flip_flop_dual(const Poset& p);

/// Lattice of down-closed subsets of `p`, ordered by inclusion.
struct IdealLattice {
  Poset lattice;
  /// Member mask of each ideal (bit i set iff element i of p belongs).
  std::vector<std::uint64_t> ideals;
  /// Maximal elements of each ideal, ascending.
  std::vector<std::vector<Elem>> generators;
};

inline constexpr int kMaxIdealBase = 25;

/// Throws std::length_error when |p| exceeds kMaxIdealBase. Elements are
/// labelled "L(a,b,...)" by the labels of their generating antichain.
IdealLattice order_ideals_lattice(const Poset& p);

/// Order isomorphism p -> q as an element map, if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const Poset& p, const Poset& q);
inline bool is_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

}  // namespace cambrep::poset
