#include "cambrep/poset/constructions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cambrep::poset {

Poset chain(int k) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(index_labels(k), covers);
}

Poset antichain(int k) { return Poset::from_covers(index_labels(k), {}); }

Poset cube(int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("cube: dimension out of range");
  const int size = 1 << n;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (int s = 0; s < size; ++s) {
    std::string bits;
    for (int b = 0; b < n; ++b) bits.push_back((s >> b) & 1 ? '1' : '0');
    labels.push_back(bits);
    for (int b = 0; b < n; ++b) {
      if (!((s >> b) & 1)) covers.emplace_back(s, s | (1 << b));
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset product(const Poset& p, const Poset& q) {
  const int m = q.size();
  std::vector<std::string> labels;
  for (Elem i = 0; i < p.size(); ++i) {
    for (Elem j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  }
  std::vector<Cover> covers;
  for (Elem i = 0; i < p.size(); ++i) {
    for (Elem j = 0; j < m; ++j) {
      for (Elem i2 : p.upper_covers(i)) covers.emplace_back(i * m + j, i2 * m + j);
      for (Elem j2 : q.upper_covers(j)) covers.emplace_back(i * m + j, i * m + j2);
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  std::vector<Cover> covers = p.covers();
  for (auto [x, y] : q.covers()) covers.emplace_back(x + p.size(), y + p.size());
  return Poset::from_covers(std::move(labels), covers);
}

Poset dual(const Poset& p) {
  std::vector<Cover> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
  return Poset::from_covers(p.labels(), covers);
}

Poset add_bottom(const Poset& p, const std::string& label) {
  std::vector<std::string> labels = p.labels();
  labels.push_back(label);
  std::vector<Cover> covers = p.covers();
  for (Elem x : p.minimal_elements()) covers.emplace_back(p.size(), x);
  return Poset::from_covers(std::move(labels), covers);
}

Poset add_top(const Poset& p, const std::string& label) {
  std::vector<std::string> labels = p.labels();
  labels.push_back(label);
  std::vector<Cover> covers = p.covers();
  for (Elem x : p.maximal_elements()) covers.emplace_back(x, p.size());
  return Poset::from_covers(std::move(labels), covers);
}

NotBoundedError::NotBoundedError(const std::string& what, std::vector<Elem> extremal)
    : std::invalid_argument(what), extremal_(std::move(extremal)) {}

Poset flip_flop(const Poset& p) {
  auto maxima = p.maximal_elements();
  if (maxima.size() != 1) {
    std::string msg = "flip_flop: no unique maximal element; maximal antichain:";
    for (Elem x : maxima) msg += " " + p.label(x);
    throw NotBoundedError(msg, maxima);
  }
  std::vector<Elem> rest;
  for (Elem x = 0; x < p.size(); ++x) {
    if (x != maxima.front()) rest.push_back(x);
  }
  return add_bottom(induced_subposet(p, rest), "0^");
}

Poset flip_flop_dual(const Poset& p) {
  auto minima = p.minimal_elements();
  if (minima.size() != 1) {
    std::string msg = "flip_flop_dual: no unique minimal element; minimal antichain:";
    for (Elem x : minima) msg += " " + p.label(x);
    throw NotBoundedError(msg, minima);
  }
  std::vector<Elem> rest;
  for (Elem x = 0; x < p.size(); ++x) {
    if (x != minima.front()) rest.push_back(x);
  }
  return add_top(induced_subposet(p, rest), "1^");
}

IdealLattice order_ideals_lattice(const Poset& p) {
  if (p.size() > kMaxIdealBase) {
    throw std::length_error("order_ideals_lattice: poset has " + std::to_string(p.size()) +
                            " elements, limit is " + std::to_string(kMaxIdealBase));
  }
  const int n = p.size();
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : p.lower_covers(x)) below[x] |= std::uint64_t{1} << y;
  }

  IdealLattice out;
  std::unordered_map<std::uint64_t, Elem> index;
  std::vector<Cover> covers;
  out.ideals.push_back(0);
  index.emplace(0, 0);
  for (std::size_t k = 0; k < out.ideals.size(); ++k) {
    const std::uint64_t ideal = out.ideals[k];
    for (Elem x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((ideal & bit) || (below[x] & ~ideal)) continue;
      const std::uint64_t next = ideal | bit;
      auto [it, inserted] = index.emplace(next, static_cast<Elem>(out.ideals.size()));
      if (inserted) out.ideals.push_back(next);
      covers.emplace_back(static_cast<Elem>(k), it->second);
    }
  }

  std::vector<std::string> labels;
  for (std::uint64_t ideal : out.ideals) {
    std::vector<Elem> gens;
    for (Elem x = 0; x < n; ++x) {
      if (!((ideal >> x) & 1)) continue;
      bool maximal = true;
      for (Elem y : p.upper_covers(x)) {
        if ((ideal >> y) & 1) maximal = false;
      }
      if (maximal) gens.push_back(x);
    }
    std::string label = "L(";
    for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + p.label(gens[i]);
    labels.push_back(label + ")");
    out.generators.push_back(std::move(gens));
  }
  out.lattice = Poset::from_covers(std::move(labels), covers);
  return out;
}

namespace {

struct Colouring {
  std::vector<int> p;
  std::vector<int> q;
};

std::vector<int> heights(const Poset& p, bool upward) {
  std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
  const auto& topo = p.linear_extension();
  if (upward) {
    for (Elem x : topo) {
      for (Elem y : p.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
    }
  } else {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      for (Elem y : p.upper_covers(*it)) h[*it] = std::max(h[*it], h[y] + 1);
    }
  }
  return h;
}

// Joint colour refinement of both posets so colours are comparable.
Colouring refine(const Poset& p, const Poset& q) {
  using Key = std::vector<int>;
  auto initial = [](const Poset& s) {
    auto hu = heights(s, true);
    auto hd = heights(s, false);
    std::vector<Key> keys;
    for (Elem x = 0; x < s.size(); ++x) {
      keys.push_back({hu[x], hd[x], static_cast<int>(s.lower_covers(x).size()),
                      static_cast<int>(s.upper_covers(x).size()),
                      static_cast<int>(s.down_set(x).count()), static_cast<int>(s.up_set(x).count())});
    }
    return keys;
  };
  auto kp = initial(p);
  auto kq = initial(q);
  Colouring c;
  int classes = -1;
  for (;;) {
    std::map<Key, int> ids;
    for (const auto& k : kp) ids.emplace(k, 0);
    for (const auto& k : kq) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    c.p.clear();
    c.q.clear();
    for (const auto& k : kp) c.p.push_back(ids[k]);
    for (const auto& k : kq) c.q.push_back(ids[k]);
    if (next == classes) break;
    classes = next;
    auto step = [](const Poset& s, const std::vector<int>& col) {
      std::vector<Key> keys;
      for (Elem x = 0; x < s.size(); ++x) {
        Key k{col[x], -1};
        std::vector<int> up, down;
        for (Elem y : s.upper_covers(x)) up.push_back(col[y]);
        for (Elem y : s.lower_covers(x)) down.push_back(col[y]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        k.insert(k.end(), up.begin(), up.end());
        k.push_back(-2);
        k.insert(k.end(), down.begin(), down.end());
        keys.push_back(std::move(k));
      }
      return keys;
    };
    kp = step(p, c.p);
    kq = step(q, c.q);
  }
  return c;
}

class IsoSearch {
 public:
  IsoSearch(const Poset& p, const Poset& q, Colouring colours)
      : p_(p), q_(q), col_(std::move(colours)), map_(static_cast<std::size_t>(p.size()), -1),
        used_(static_cast<std::size_t>(q.size()), false) {
    // Visit P in BFS order from rare colours so each new element has a mapped neighbour.
    std::vector<int> freq(static_cast<std::size_t>(p.size() + q.size() + 1), 0);
    for (int c : col_.p) ++freq[static_cast<std::size_t>(c)];
    const auto adj = hasse_graph(p);
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    for (;;) {
      Elem start = -1;
      for (Elem x = 0; x < p.size(); ++x) {
        if (!seen[x] && (start < 0 || freq[col_.p[x]] < freq[col_.p[start]])) start = x;
      }
      if (start < 0) break;
      std::vector<Elem> queue{start};
      seen[start] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (Elem y : adj[queue[i]]) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Elem x = order_[depth];
    for (Elem y = 0; y < q_.size(); ++y) {
      if (used_[y] || col_.q[y] != col_.p[x] || !consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = true;
      if (run(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = false;
    }
    return false;
  }

  const std::vector<Elem>& mapping() const { return map_; }

 private:
  bool consistent(Elem x, Elem y) const {
    for (Elem z = 0; z < p_.size(); ++z) {
      const Elem w = map_[z];
      if (w < 0) continue;
      if (p_.leq(z, x) != q_.leq(w, y) || p_.leq(x, z) != q_.leq(y, w)) return false;
    }
    return true;
  }

  const Poset& p_;
  const Poset& q_;
  Colouring col_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
  std::vector<Elem> order_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  auto colours = refine(p, q);
  auto cp = colours.p;
  auto cq = colours.q;
  std::sort(cp.begin(), cp.end());
  std::sort(cq.begin(), cq.end());
  if (cp != cq) return std::nullopt;
  IsoSearch search(p, q, std::move(colours));
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

}  // namespace cambrep::poset
