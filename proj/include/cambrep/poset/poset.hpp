#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cambrep/exact/scalar.hpp"

namespace cambrep::poset {

using Elem = int;
using Cover = std::pair<Elem, Elem>;  // (x, y) with x covered by y
using Bitset = boost::dynamic_bitset<>;

/// Thrown by Poset::from_covers when the input relation has a directed cycle.
class CycleError : public std::invalid_argument {
 public:
  explicit CycleError(std::vector<Elem> cycle);
  const std::vector<Elem>& cycle() const { return cycle_; }

 private:
  std::vector<Elem> cycle_;
};

/// Finite poset with labelled elements 0..n-1.
///
/// The Hasse diagram is always the transitive reduction of whatever relation
/// the poset was built from, and the order relation is cached as one bitset
/// row per element: up_[x] holds every y with x <= y.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `pairs` (read as x < y). Redundant pairs
  /// are dropped by transitive reduction. Throws CycleError on a cycle.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& pairs);

  /// Builds a poset from an explicit order relation given as a predicate
  /// less(x, y); the relation must already be transitive and irreflexive.
  template <typename Less>
  static Poset from_order(std::vector<std::string> labels, Less&& less) {
    const auto n = static_cast<Elem>(labels.size());
    std::vector<Bitset> up(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (Elem x = 0; x < n; ++x) {
      up[x].set(x);
      for (Elem y = 0; y < n; ++y) {
        if (x != y && less(x, y)) up[x].set(y);
      }
    }
    return from_closure(std::move(labels), std::move(up));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(const std::string& label) const;

  bool leq(Elem x, Elem y) const { return up_[x].test(y); }
  bool less(Elem x, Elem y) const { return x != y && up_[x].test(y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  const Bitset& up_set(Elem x) const { return up_[x]; }
  const Bitset& down_set(Elem x) const { return down_[x]; }

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_[x]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_[x]; }
  bool covered_by(Elem x, Elem y) const;
  /// Index of the cover (x, y) in covers(), if it is one.
  std::optional<std::size_t> cover_index(Elem x, Elem y) const;

  std::vector<Elem> minimal_elements() const;
  std::vector<Elem> maximal_elements() const;
  /// Elements ordered so that x < y implies x comes first.
  const std::vector<Elem>& linear_extension() const { return topo_; }

  friend bool operator==(const Poset& a, const Poset& b);

 private:
  static Poset from_closure(std::vector<std::string> labels, std::vector<Bitset> up);

  std::vector<std::string> labels_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Elem>> upper_;
  std::vector<std::vector<Elem>> lower_;
  std::vector<Elem> topo_;
};

/// Order-preserving map between two posets.
struct PosetMorphism {
  Poset source;
  Poset target;
  std::vector<Elem> map;
};

std::vector<std::string> index_labels(int n);

Poset induced_subposet(const Poset& p, const std::vector<Elem>& subset);

struct LatticeTables {
  std::vector<std::vector<Elem>> meet;
  std::vector<std::vector<Elem>> join;
};

/// Meet and join tables if every pair has a glb and an lub, else nullopt.
std::optional<LatticeTables> lattice_tables(const Poset& p);
bool is_lattice(const Poset& p);

/// counts[x][y] = number of cover paths from x to y (0 unless x <= y).
std::vector<std::vector<exact::Integer>> path_counts(const Poset& p);
bool is_path_unique(const Poset& p);

struct Regularity {
  std::vector<int> degrees;  // in + out degree in the Hasse diagram
  std::optional<int> uniform;
};
Regularity hasse_regularity(const Poset& p);

/// True iff the Hasse diagram (as an undirected graph) is connected.
bool is_connected(const Poset& p);

/// Undirected Hasse diagram as adjacency lists.
std::vector<std::vector<Elem>> hasse_graph(const Poset& p);

bool is_order_preserving(const PosetMorphism& f);
bool is_surjective(const PosetMorphism& f);
std::vector<std::vector<Elem>> fibers(const PosetMorphism& f);

}  // namespace cambrep::poset
