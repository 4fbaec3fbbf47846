#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cambrep/exact/matrix.hpp"
#include "cambrep/poset/poset.hpp"

namespace cambrep::coxeter {

enum class Family { A, B, C, H, I };

struct CoxeterFactor {
  Family family;
  int rank;
  int h = 0;  // dihedral order parameter, only for I2(h)

  std::string name() const;
  friend bool operator==(const CoxeterFactor&, const CoxeterFactor&) = default;
};

/// Product of irreducible finite Coxeter types, e.g. "A1xI2(5)".
struct CoxeterType {
  std::vector<CoxeterFactor> factors;

  /// Parses "A3", "B3", "C3", "H3", "I2(7)", "A1xA1xA1", "A1xI2(5)".
  /// Throws std::invalid_argument on syntax errors or unsupported types.
  static CoxeterType parse(const std::string& text);

  int rank() const;
  std::string name() const;
  bool crystallographic() const;
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

inline constexpr int kMaxGroupOrder = 10000;

using GroupElem = int;

/// Finite Coxeter group, fully enumerated.
///
/// Elements are stored as permutations of the root system, on which the group
/// acts faithfully. Crystallographic and H3 factors get their roots from the
/// exact geometric representation over Q(sqrt d); dihedral factors I2(h) use
/// the regular 2h-gon of roots at angles k*pi/h, so no cosine field is needed.
class CoxeterGroup {
 public:
  /// Throws std::invalid_argument for unsupported types and std::length_error
  /// when the order exceeds kMaxGroupOrder.
  static CoxeterGroup build(const CoxeterType& type);

  const CoxeterType& type() const { return type_; }
  int rank() const { return rank_; }
  int order() const { return static_cast<int>(perms_.size()); }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return m_; }

  int num_roots() const { return static_cast<int>(positive_.size()); }
  int num_positive_roots() const { return num_positive_; }
  bool is_positive_root(int r) const { return positive_[static_cast<std::size_t>(r)]; }
  /// Simple-root coordinates of root r, for geometric factors; empty for
  /// dihedral factors.
  const std::vector<exact::QuadraticScalar>& root_coordinates(int r) const { return coords_[static_cast<std::size_t>(r)]; }

  GroupElem identity() const { return 0; }
  GroupElem longest() const { return longest_; }
  int length(GroupElem w) const { return length_[static_cast<std::size_t>(w)]; }
  /// {beta > 0 : w^{-1} beta < 0}, indexed over positive roots.
  const poset::Bitset& inversions(GroupElem w) const { return inversions_[static_cast<std::size_t>(w)]; }

  GroupElem right_mul(GroupElem w, int gen) const { return right_[static_cast<std::size_t>(w)][static_cast<std::size_t>(gen)]; }
  GroupElem left_mul(int gen, GroupElem w) const { return left_[static_cast<std::size_t>(w)][static_cast<std::size_t>(gen)]; }
  GroupElem multiply(GroupElem u, GroupElem v) const;
  GroupElem inverse(GroupElem w) const;
  /// Product s_{word[0]} ... s_{word[k-1]} (0-based generators).
  GroupElem from_word(const std::vector<int>& word) const;
  /// Lexicographically first reduced word (0-based generators).
  std::vector<int> reduced_word(GroupElem w) const;
  /// Reduced word with 1-based generator digits, "e" for the identity.
  std::string word_label(GroupElem w) const;

 private:
  using Perm = std::vector<std::uint8_t>;
  GroupElem lookup(const Perm& p) const;

  CoxeterType type_;
  int rank_ = 0;
  std::vector<std::vector<int>> m_;
  std::vector<bool> positive_;
  std::vector<int> positive_index_;  // root -> index among positive roots, or -1
  int num_positive_ = 0;
  std::vector<std::vector<exact::QuadraticScalar>> coords_;
  std::vector<Perm> generator_perms_;

  std::vector<Perm> perms_;
  std::map<Perm, GroupElem> index_;
  std::vector<int> length_;
  std::vector<poset::Bitset> inversions_;
  std::vector<std::vector<GroupElem>> right_;
  std::vector<std::vector<GroupElem>> left_;
  GroupElem longest_ = 0;
};

/// Right weak order: w is covered by w*s when the length goes up by one.
/// Element i of the poset is group element i.
poset::Poset weak_order(const CoxeterGroup& g);

/// u <= w in the right weak order, decided by inclusion of inversion sets.
bool weak_leq(const CoxeterGroup& g, GroupElem u, GroupElem w);

}  // namespace cambrep::coxeter
