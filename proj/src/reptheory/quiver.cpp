#include "mckay/reptheory/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mckay {

bool McKayQuiver::adjacent(int i, int j) const {
  const auto e = std::minmax(i, j);
  return std::find(reduced_edges.begin(), reduced_edges.end(), std::pair<int, int>(e.first, e.second)) !=
         reduced_edges.end();
}

std::vector<int> McKayQuiver::neighbours(int i) const {
  std::vector<int> out;
  for (auto [a, b] : reduced_edges) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

McKayQuiver mckay_quiver(const CharTable& t, const Purity* purity) {
  McKayQuiver q;
  const auto labels = character_labels(t, purity);
  for (int i = 0; i < t.size(); ++i)
    q.vertices.push_back({labels[static_cast<std::size_t>(i)], t.dims[static_cast<std::size_t>(i)],
                          purity ? static_cast<bool>(purity->pure[static_cast<std::size_t>(i)]) : true});
  const ClassFunction nat = natural_character(*t.group);
  q.adjacency.assign(static_cast<std::size_t>(t.size()), std::vector<int>(static_cast<std::size_t>(t.size()), 0));
  for (int i = 0; i < t.size(); ++i) {
    const auto m = decompose(pointwise_product(nat, t.chars[static_cast<std::size_t>(i)]), t);
    for (int j = 0; j < t.size(); ++j) q.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) {
      if (i == t.trivial_index || j == t.trivial_index) continue;
      if (q.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) q.reduced_edges.emplace_back(i, j);
    }
  return q;
}

LabelledGraph reduced_graph(const McKayQuiver& q) {
  LabelledGraph g;
  std::vector<int> remap(q.vertices.size(), -1);
  for (std::size_t i = 1; i < q.vertices.size(); ++i) {
    remap[i] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(q.vertices[i]);
  }
  for (auto [a, b] : q.reduced_edges)
    g.edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  return g;
}

std::optional<std::vector<int>> graph_isomorphism(const LabelledGraph& a, const LabelledGraph& b) {
  const std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return std::nullopt;
  auto adj = [](const LabelledGraph& g) {
    std::vector<std::set<int>> s(g.vertices.size());
    for (auto [x, y] : g.edges) {
      s[static_cast<std::size_t>(x)].insert(y);
      s[static_cast<std::size_t>(y)].insert(x);
    }
    return s;
  };
  const auto aa = adj(a), bb = adj(b);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const auto &va = a.vertices[i], &vb = b.vertices[j];
      if (va.dim != vb.dim || va.pure != vb.pure || aa[i].size() != bb[j].size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = (aa[i].count(static_cast<int>(k)) > 0) == (bb[j].count(map[k]) > 0);
      if (!ok) continue;
      map[i] = static_cast<int>(j);
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    map[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace mckay
