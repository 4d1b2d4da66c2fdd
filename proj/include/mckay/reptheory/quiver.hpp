#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/reptheory/chartable.hpp"

namespace mckay {

struct QuiverVertex {
  std::string label;
  int dim = 1;
  bool pure = true;
};

struct McKayQuiver {
  std::vector<QuiverVertex> vertices;           // table order, trivial first
  std::vector<std::vector<int>> adjacency;      // a_ij = <chi_Q chi_i, chi_j>
  std::vector<std::pair<int, int>> reduced_edges;  // i < j, no trivial vertex, no loops

  bool adjacent(int i, int j) const;
  std::vector<int> neighbours(int i) const;  // in the reduced quiver
};

// purity may be null for groups that are not binary.
McKayQuiver mckay_quiver(const CharTable& t, const Purity* purity);

// Undirected simple graph on labelled, coloured vertices.
struct LabelledGraph {
  std::vector<QuiverVertex> vertices;
  std::vector<std::pair<int, int>> edges;
};

LabelledGraph reduced_graph(const McKayQuiver& q);

// Isomorphism preserving (dim, purity); returns the vertex map a -> b if any.
std::optional<std::vector<int>> graph_isomorphism(const LabelledGraph& a, const LabelledGraph& b);

}  // namespace mckay
