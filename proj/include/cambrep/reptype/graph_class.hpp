#pragma once

#include <string>
#include <vector>

namespace cambrep::reptype {

/// Undirected simple graph as adjacency lists on vertices 0..n-1.
using Graph = std::vector<std::vector<int>>;

enum class GraphKind { Dynkin, Affine, Wild };

struct GraphClass {
  GraphKind kind = GraphKind::Wild;
  /// "A5", "D4", "E6", ... for Dynkin; "~A5", "~D4", "~E7", ... for affine;
  /// empty for wild graphs.
  std::string shape;

  std::string to_string() const;  // "Dynkin(A5)", "Affine(~A5)", "Wild"
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

/// Classifies g by the definiteness of its Tits form (2 on the diagonal, -1
/// per edge) and names the Dynkin or affine shape. Throws
/// std::invalid_argument if g is empty, not simple or not connected.
GraphClass graph_class(const Graph& g);

/// Tits matrix of g, entries as plain integers.
std::vector<std::vector<int>> tits_matrix(const Graph& g);

std::string to_string(GraphKind kind);

}  // namespace cambrep::reptype
