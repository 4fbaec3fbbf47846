#include "cambrep/poset/poset.hpp"

#include <algorithm>
#include <numeric>

namespace cambrep::poset {

namespace {

std::string describe_cycle(const std::vector<Elem>& cycle) {
  std::string s = "order relation has a cycle:";
  for (Elem x : cycle) s += " " + std::to_string(x);
  return s;
}

// Returns a directed cycle of the relation if there is one.
std::optional<std::vector<Elem>> find_cycle(const std::vector<std::vector<Elem>>& succ) {
  const auto n = succ.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Elem> stack;
  std::vector<std::size_t> next(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack.push_back(static_cast<Elem>(root));
    state[root] = 1;
    while (!stack.empty()) {
      Elem x = stack.back();
      if (next[x] < succ[x].size()) {
        Elem y = succ[x][next[x]++];
        if (state[y] == 1) {
          auto it = std::find(stack.begin(), stack.end(), y);
          return std::vector<Elem>(it, stack.end());
        }
        if (state[y] == 0) {
          state[y] = 1;
          stack.push_back(y);
        }
      } else {
        state[x] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CycleError::CycleError(std::vector<Elem> cycle)
    : std::invalid_argument(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<Cover>& pairs) {
  const auto n = labels.size();
  std::vector<std::vector<Elem>> succ(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
      throw std::out_of_range("cover (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") refers to a missing element");
    }
    if (x == y) throw CycleError({x});
    succ[x].push_back(y);
  }
  if (auto cycle = find_cycle(succ)) throw CycleError(*cycle);

  // Closure in reverse topological order (DFS post-order).
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<bool> done(n, false);
  std::vector<std::pair<Elem, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (done[root]) continue;
    stack.emplace_back(static_cast<Elem>(root), 0);
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i < succ[x].size()) {
        Elem y = succ[x][i++];
        if (!done[y]) stack.emplace_back(y, 0);
      } else {
        up[x].set(x);
        for (Elem y : succ[x]) up[x] |= up[y];
        done[x] = true;
        stack.pop_back();
      }
    }
  }
  return from_closure(std::move(labels), std::move(up));
}

Poset Poset::from_closure(std::vector<std::string> labels, std::vector<Bitset> up) {
  Poset p;
  const auto n = labels.size();
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.down_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y)) {
      p.down_[y].set(x);
    }
  }
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y)) {
      if (y == x) continue;
      // x < y is a cover iff [x, y] has exactly two elements.
      if ((p.up_[x] & p.down_[y]).count() == 2) {
        p.covers_.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
        p.upper_[x].push_back(static_cast<Elem>(y));
        p.lower_[y].push_back(static_cast<Elem>(x));
      }
    }
  }
  p.topo_.resize(n);
  std::iota(p.topo_.begin(), p.topo_.end(), 0);
  std::stable_sort(p.topo_.begin(), p.topo_.end(),
                   [&](Elem a, Elem b) { return p.down_[a].count() < p.down_[b].count(); });
  return p;
}

std::optional<Elem> Poset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

bool Poset::covered_by(Elem x, Elem y) const {
  const auto& u = upper_[x];
  return std::find(u.begin(), u.end(), y) != u.end();
}

std::optional<std::size_t> Poset::cover_index(Elem x, Elem y) const {
  auto it = std::find(covers_.begin(), covers_.end(), Cover{x, y});
  if (it == covers_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<Elem> Poset::minimal_elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size(); ++x) {
    if (lower_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<Elem> Poset::maximal_elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size(); ++x) {
    if (upper_[x].empty()) out.push_back(x);
  }
  return out;
}

bool operator==(const Poset& a, const Poset& b) { return a.labels_ == b.labels_ && a.up_ == b.up_; }

Poset induced_subposet(const Poset& p, const std::vector<Elem>& subset) {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (Elem x : subset) {
    if (x < 0 || x >= p.size()) throw std::out_of_range("induced_subposet: element out of range");
    labels.push_back(p.label(x));
  }
  return Poset::from_order(std::move(labels), [&](Elem i, Elem j) {
    return p.less(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]);
  });
}

std::optional<LatticeTables> lattice_tables(const Poset& p) {
  const int n = p.size();
  LatticeTables t;
  t.meet.assign(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n), -1));
  t.join.assign(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n), -1));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      // Least element of the common upper set, if it exists.
      Bitset ub = p.up_set(x) & p.up_set(y);
      Bitset lb = p.down_set(x) & p.down_set(y);
      Elem join = -1;
      for (auto z = ub.find_first(); z != Bitset::npos; z = ub.find_next(z)) {
        if (ub.is_subset_of(p.up_set(static_cast<Elem>(z)))) {
          join = static_cast<Elem>(z);
          break;
        }
      }
      Elem meet = -1;
      for (auto z = lb.find_first(); z != Bitset::npos; z = lb.find_next(z)) {
        if (lb.is_subset_of(p.down_set(static_cast<Elem>(z)))) {
          meet = static_cast<Elem>(z);
          break;
        }
      }
      if (join < 0 || meet < 0) return std::nullopt;
      t.join[x][y] = t.join[y][x] = join;
      t.meet[x][y] = t.meet[y][x] = meet;
    }
  }
  return t;
}

bool is_lattice(const Poset& p) { return p.empty() || lattice_tables(p).has_value(); }

std::vector<std::vector<exact::Integer>> path_counts(const Poset& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::vector<exact::Integer>> counts(n, std::vector<exact::Integer>(n, exact::Integer(0)));
  const auto& topo = p.linear_extension();
  for (Elem x = 0; x < p.size(); ++x) {
    auto& row = counts[x];
    row[x] = 1;
    for (Elem z : topo) {
      if (row[z] == 0) continue;
      for (Elem y : p.upper_covers(z)) row[y] += row[z];
    }
  }
  return counts;
}

bool is_path_unique(const Poset& p) {
  for (const auto& row : path_counts(p)) {
    for (const auto& c : row) {
      if (c > 1) return false;
    }
  }
  return true;
}

Regularity hasse_regularity(const Poset& p) {
  Regularity r;
  for (Elem x = 0; x < p.size(); ++x) {
    r.degrees.push_back(static_cast<int>(p.upper_covers(x).size() + p.lower_covers(x).size()));
  }
  if (!r.degrees.empty() &&
      std::all_of(r.degrees.begin(), r.degrees.end(), [&](int d) { return d == r.degrees.front(); })) {
    r.uniform = r.degrees.front();
  }
  return r;
}

std::vector<std::vector<Elem>> hasse_graph(const Poset& p) {
  std::vector<std::vector<Elem>> adj(static_cast<std::size_t>(p.size()));
  for (auto [x, y] : p.covers()) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  return adj;
}

bool is_connected(const Poset& p) {
  if (p.empty()) return true;
  const auto adj = hasse_graph(p);
  std::vector<bool> seen(adj.size(), false);
  std::vector<Elem> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    for (Elem y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == adj.size();
}

bool is_order_preserving(const PosetMorphism& f) {
  if (static_cast<int>(f.map.size()) != f.source.size()) return false;
  for (Elem y : f.map) {
    if (y < 0 || y >= f.target.size()) return false;
  }
  // Checking covers suffices: the order is generated by them.
  for (auto [x, y] : f.source.covers()) {
    if (!f.target.leq(f.map[x], f.map[y])) return false;
  }
  return true;
}

bool is_surjective(const PosetMorphism& f) {
  std::vector<bool> hit(static_cast<std::size_t>(f.target.size()), false);
  for (Elem y : f.map) {
    if (y >= 0 && y < f.target.size()) hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::vector<Elem>> fibers(const PosetMorphism& f) {
  std::vector<std::vector<Elem>> out(static_cast<std::size_t>(f.target.size()));
  for (Elem x = 0; x < static_cast<Elem>(f.map.size()); ++x) out[f.map[x]].push_back(x);
  return out;
}

}  // namespace cambrep::poset
