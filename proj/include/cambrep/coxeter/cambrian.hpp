#pragma once

#include <string>
#include <vector>

#include "cambrep/coxeter/group.hpp"
#include "cambrep/poset/poset.hpp"

namespace cambrep::coxeter {

/// Coxeter element c = s_{order[0]} ... s_{order[n-1]}, generators 0-based.
struct CoxeterElement {
  std::vector<int> order;

  /// Parses "1,2,3" (1-based, as on the command line). Throws
  /// std::invalid_argument unless it is a permutation of 1..rank.
  static CoxeterElement parse(const std::string& text, int rank);
  /// s_1 s_2 ... s_n.
  static CoxeterElement standard(int rank);
  std::string to_string() const;  // 1-based, comma separated
};

/// One representative ordering for each distinct group element c.
std::vector<CoxeterElement> distinct_coxeter_elements(const CoxeterGroup& g);

/// c-sorting word of w split into passes through c: the leftmost subword of
/// c c c ... spelling a reduced word for w. Letters are 0-based generators.
struct SortingWord {
  std::vector<std::vector<int>> passes;
  std::vector<int> word() const;
};

SortingWord c_sorting_word(const CoxeterGroup& g, GroupElem w, const CoxeterElement& c);
/// True iff the pass supports are weakly nested.
bool is_c_sortable(const CoxeterGroup& g, GroupElem w, const CoxeterElement& c);
std::vector<GroupElem> sortable_elements(const CoxeterGroup& g, const CoxeterElement& c);

struct CambrianLattice {
  poset::Poset poset;                // induced subposet of the weak order
  std::vector<GroupElem> elements;   // group element of each poset element
};

CambrianLattice cambrian(const CoxeterGroup& g, const CoxeterElement& c);

/// Largest c-sortable element below w in the weak order. Throws
/// std::logic_error if the sortables below w have no maximum.
GroupElem pi_down(const CoxeterGroup& g, const CoxeterElement& c, GroupElem w);

/// pi_down as a poset morphism weak_order(g) -> cambrian(g, c).poset.
poset::PosetMorphism cambrian_projection(const CoxeterGroup& g, const CoxeterElement& c);

}  // namespace cambrep::coxeter
