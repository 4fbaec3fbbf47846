#pragma once

// Independent reference implementations used by the unit tests and the
// acceptance binary. Nothing here calls the library code it is checking.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambrep/exact/scalar.hpp"
#include "cambrep/poset/poset.hpp"

namespace oracle {

// ---------------------------------------------------------------- graphs

// Adjacency bitmasks, at most 16 vertices.
using SmallGraph = std::vector<std::uint16_t>;

inline std::vector<std::vector<int>> to_lists(const SmallGraph& g) {
  std::vector<std::vector<int>> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w = 0; w < g.size(); ++w) {
      if (g[v] >> w & 1) out[v].push_back(static_cast<int>(w));
    }
  }
  return out;
}

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Colour refinement for a fixed number of rounds; colours are hashes, so they
// are comparable across graphs.
inline std::vector<std::uint64_t> wl_colours(const SmallGraph& g) {
  const auto n = g.size();
  std::vector<std::uint64_t> c(n);
  for (std::size_t v = 0; v < n; ++v) c[v] = mix(static_cast<std::uint64_t>(__builtin_popcount(g[v])));
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::uint64_t> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (g[v] >> w & 1) nb.push_back(c[w]);
      }
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = mix(c[v]);
      for (auto x : nb) h = mix(h ^ x);
      next[v] = h;
    }
    c = std::move(next);
  }
  return c;
}

inline std::uint64_t invariant(const std::vector<std::uint64_t>& colours) {
  auto s = colours;
  std::sort(s.begin(), s.end());
  std::uint64_t h = mix(s.size());
  for (auto x : s) h = mix(h ^ x);
  return h;
}

// Backtracking isomorphism test restricted to colour-preserving maps.
inline bool isomorphic(const SmallGraph& a, const std::vector<std::uint64_t>& ca, const SmallGraph& b,
                       const std::vector<std::uint64_t>& cb) {
  const auto n = a.size();
  if (b.size() != n) return false;
  std::vector<int> map(n, -1);
  std::uint32_t used = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used >> w & 1 || ca[v] != cb[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = ((a[v] >> u) & 1) == ((b[w] >> map[u]) & 1);
      }
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used |= 1u << w;
      if (go(v + 1)) return true;
      used &= ~(1u << w);
    }
    return false;
  };
  return go(0);
}

// All connected graphs on n vertices up to isomorphism, for n = 1..max_n.
// Every connected graph has a vertex whose removal leaves it connected, so
// adding one vertex with a nonempty neighbourhood to each connected graph on
// n - 1 vertices reaches them all.
inline std::vector<std::vector<SmallGraph>> connected_graphs(int max_n) {
  std::vector<std::vector<SmallGraph>> by_n(static_cast<std::size_t>(max_n) + 1);
  if (max_n >= 1) by_n[1] = {SmallGraph{0}};
  for (int n = 2; n <= max_n; ++n) {
    struct Entry {
      SmallGraph g;
      std::vector<std::uint64_t> colours;
    };
    std::unordered_map<std::uint64_t, std::vector<Entry>> buckets;
    for (const auto& parent : by_n[static_cast<std::size_t>(n) - 1]) {
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        SmallGraph g = parent;
        g.push_back(static_cast<std::uint16_t>(nb));
        for (int v = 0; v < n - 1; ++v) {
          if (nb >> v & 1) g[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << (n - 1));
        }
        auto colours = wl_colours(g);
        auto& bucket = buckets[invariant(colours)];
        bool seen = false;
        for (const auto& e : bucket) {
          if (isomorphic(g, colours, e.g, e.colours)) {
            seen = true;
            break;
          }
        }
        if (!seen) bucket.push_back({std::move(g), std::move(colours)});
      }
    }
    for (auto& [h, bucket] : buckets) {
      for (auto& e : bucket) by_n[static_cast<std::size_t>(n)].push_back(std::move(e.g));
    }
    std::sort(by_n[static_cast<std::size_t>(n)].begin(), by_n[static_cast<std::size_t>(n)].end());
  }
  return by_n;
}

// Dynkin / affine / wild by shape alone. Returns ("Dynkin", "E7"),
// ("Affine", "~D5"), ("Wild", "").
inline std::pair<std::string, std::string> shape_class(const SmallGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  int edges2 = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = __builtin_popcount(g[v]);
    edges2 += deg[v];
  }
  const int edges = edges2 / 2;
  const int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (edges == n && maxdeg == 2) return {"Affine", "~A" + std::to_string(n - 1)};
  if (edges != n - 1) return {"Wild", ""};  // connected with a cycle plus more
  // tree from here on
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (deg[v] >= 3) branch.push_back(v);
  }
  if (branch.empty()) return {"Dynkin", "A" + std::to_string(n)};
  auto arm_lengths = [&](int c) {
    std::vector<int> arms;
    for (int w = 0; w < n; ++w) {
      if (!(g[c] >> w & 1)) continue;
      int prev = c, cur = w, len = 1;
      while (deg[cur] == 2) {
        int next = -1;
        for (int x = 0; x < n; ++x) {
          if ((g[cur] >> x & 1) && x != prev) next = x;
        }
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(deg[cur] == 1 ? len : -len);  // negative: ends at a branch vertex
    }
    std::sort(arms.begin(), arms.end());
    return arms;
  };
  if (branch.size() == 1) {
    const int c = branch[0];
    if (deg[c] == 4) {
      return n == 5 ? std::pair<std::string, std::string>{"Affine", "~D4"} : std::pair<std::string, std::string>{"Wild", ""};
    }
    if (deg[c] > 4) return {"Wild", ""};
    auto a = arm_lengths(c);
    // 1/(p+1) + 1/(q+1) + 1/(r+1) against 1, in integers
    const long p = a[0] + 1, q = a[1] + 1, r = a[2] + 1;
    const long lhs = q * r + p * r + p * q, rhs = p * q * r;
    if (lhs > rhs) {
      if (a[0] == 1 && a[1] == 1) return {"Dynkin", "D" + std::to_string(n)};
      return {"Dynkin", "E" + std::to_string(n)};
    }
    if (lhs == rhs) return {"Affine", "~E" + std::to_string(n - 1)};
    return {"Wild", ""};
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    // both branch vertices carry two leaves
    for (int c : branch) {
      int leaves = 0;
      for (int w = 0; w < n; ++w) {
        if ((g[c] >> w & 1) && deg[w] == 1) ++leaves;
      }
      if (leaves != 2) return {"Wild", ""};
    }
    return {"Affine", "~D" + std::to_string(n - 1)};
  }
  return {"Wild", ""};
}

// ------------------------------------------------------------ posets

// Random poset on n elements: closure of random pairs i < j.
inline cambrep::poset::Poset random_poset(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<cambrep::poset::Cover> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(i, j);
    }
  }
  return cambrep::poset::Poset::from_covers(cambrep::poset::index_labels(n), pairs);
}

// Number of down-closed subsets, by checking all 2^n subsets.
inline long count_ideals(const cambrep::poset::Poset& p) {
  const int n = p.size();
  long count = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool closed = true;
    for (int y = 0; y < n && closed; ++y) {
      if (!(s >> y & 1)) continue;
      for (int x = 0; x < n && closed; ++x) {
        if (p.less(x, y) && !(s >> x & 1)) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

// ----------------------------------------------------- linear algebra

using cambrep::exact::Rational;
using Dense = std::vector<std::vector<Rational>>;

// Rank by plain fraction Gaussian elimination on nested vectors.
inline int dense_rank(Dense a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim Hom(M, N) for representations given as dims and one dense matrix per
// cover (dims[y] x dims[x]), via vec(N f_x - f_y M) = (I (x) N) vec f_x -
// (M^T (x) I) vec f_y with column-major vec.
struct DenseRep {
  std::vector<int> dims;
  std::vector<Dense> maps;  // aligned with the poset's covers()
};

inline int hom_dim(const cambrep::poset::Poset& p, const DenseRep& m, const DenseRep& n) {
  const int k = p.size();
  std::vector<int> off(static_cast<std::size_t>(k) + 1, 0);
  for (int x = 0; x < k; ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
  Dense sys;
  for (std::size_t e = 0; e < p.covers().size(); ++e) {
    const auto [x, y] = p.covers()[e];
    const auto& ne = n.maps[e];
    const auto& me = m.maps[e];
    // unknown f_x(i, j) at off[x] + j * n.dims[x] + i (column-major)
    for (int j = 0; j < m.dims[x]; ++j) {
      for (int i = 0; i < n.dims[y]; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(off[k]), 0);
        for (int t = 0; t < n.dims[x]; ++t) row[off[x] + j * n.dims[x] + t] += ne[i][t];
        for (int t = 0; t < m.dims[y]; ++t) row[off[y] + t * n.dims[y] + i] -= me[t][j];
        sys.push_back(std::move(row));
      }
    }
  }
  return off[k] - (sys.empty() ? 0 : dense_rank(sys));
}

// Signs of x^T a x over the nonzero lattice points of [-r, r]^n.
struct SignSample {
  bool negative = false;
  bool zero = false;
};

inline SignSample sample_signs(const std::vector<std::vector<long>>& a, int r) {
  const std::size_t n = a.size();
  SignSample out;
  std::vector<long> x(n, -r);
  while (true) {
    bool nonzero = false;
    for (long v : x) nonzero |= v != 0;
    if (nonzero) {
      long q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q += x[i] * a[i][j] * x[j];
      }
      out.negative |= q < 0;
      out.zero |= q == 0;
    }
    std::size_t k = 0;
    while (k < n && x[k] == r) x[k++] = -r;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

}  // namespace oracle
