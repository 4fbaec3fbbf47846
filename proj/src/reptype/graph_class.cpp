#include "cambrep/reptype/graph_class.hpp"

#include <algorithm>
#include <stdexcept>

#include "cambrep/exact/matrix.hpp"

namespace cambrep::reptype {

namespace {

void check_simple_connected(const Graph& g) {
  const auto n = static_cast<int>(g.size());
  if (n == 0) throw std::invalid_argument("graph_class: empty graph");
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = g[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("graph_class: repeated edge at vertex " + std::to_string(v));
    }
    for (int w : nb) {
      if (w < 0 || w >= n || w == v) throw std::invalid_argument("graph_class: bad neighbour of vertex " + std::to_string(v));
      if (std::find(g[w].begin(), g[w].end(), v) == g[w].end()) {
        throw std::invalid_argument("graph_class: adjacency is not symmetric");
      }
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw std::invalid_argument("graph_class: graph is not connected");
}

std::size_t edge_count(const Graph& g) {
  std::size_t twice = 0;
  for (const auto& nb : g) twice += nb.size();
  return twice / 2;
}

// Lengths of the paths hanging off `centre`, stopping at a leaf or at another
// branch vertex (which is not counted).
std::vector<int> arms(const Graph& g, int centre) {
  std::vector<int> out;
  for (int first : g[centre]) {
    int prev = centre, cur = first, len = 0;
    while (true) {
      if (g[cur].size() > 2) break;
      ++len;
      if (g[cur].size() == 1) break;
      const int next = g[cur][0] == prev ? g[cur][1] : g[cur][0];
      prev = cur;
      cur = next;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string dynkin_shape(const Graph& g) {
  const auto n = static_cast<int>(g.size());
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (g[v].size() > 2) branch.push_back(v);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() == 1 && g[branch[0]].size() == 3) {
    const auto a = arms(g, branch[0]);
    if (a[0] == 1 && a[1] == 1) return "D" + std::to_string(n);
    if (a[0] == 1 && a[1] == 2 && a[2] <= 4) return "E" + std::to_string(n);
  }
  throw std::logic_error("positive definite Tits form on an unrecognised tree");
}

std::string affine_shape(const Graph& g) {
  const auto n = static_cast<int>(g.size());
  if (edge_count(g) == static_cast<std::size_t>(n)) return "~A" + std::to_string(n - 1);
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (g[v].size() > 2) branch.push_back(v);
  }
  if (branch.size() == 1 && g[branch[0]].size() == 4) return "~D4";
  if (branch.size() == 2) return "~D" + std::to_string(n - 1);
  if (branch.size() == 1 && g[branch[0]].size() == 3) {
    const auto a = arms(g, branch[0]);
    if (a == std::vector<int>{2, 2, 2}) return "~E6";
    if (a == std::vector<int>{1, 3, 3}) return "~E7";
    if (a == std::vector<int>{1, 2, 5}) return "~E8";
  }
  throw std::logic_error("corank-one Tits form on an unrecognised graph");
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Dynkin: return "Dynkin";
    case GraphKind::Affine: return "Affine";
    case GraphKind::Wild: return "Wild";
  }
  return "?";
}

std::string GraphClass::to_string() const {
  if (kind == GraphKind::Wild) return "Wild";
  return reptype::to_string(kind) + "(" + shape + ")";
}

std::vector<std::vector<int>> tits_matrix(const Graph& g) {
  const auto n = g.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    t[v][v] = 2;
    for (int w : g[v]) t[v][static_cast<std::size_t>(w)] = -1;
  }
  return t;
}

GraphClass graph_class(const Graph& g) {
  check_simple_connected(g);
  const auto t = tits_matrix(g);
  const auto n = static_cast<exact::Index>(g.size());
  exact::RationalMatrix m(n, n);
  for (exact::Index i = 0; i < n; ++i) {
    for (exact::Index j = 0; j < n; ++j) m(i, j) = exact::Rational(t[i][j]);
  }
  const auto d = exact::definiteness(m);
  if (d.kind == exact::DefinitenessKind::PositiveDefinite) return {GraphKind::Dynkin, dynkin_shape(g)};
  if (d.kind == exact::DefinitenessKind::PositiveSemidefinite && d.corank == 1) {
    return {GraphKind::Affine, affine_shape(g)};
  }
  return {GraphKind::Wild, ""};
}

}  // namespace cambrep::reptype
