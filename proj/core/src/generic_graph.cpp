#include "connord/generic_graph.hpp"

#include <algorithm>

namespace connord {

GenericGraph generic_graph(const ConnectivitySpace& space) {
  GenericGraph g;
  g.vertices = space.irreducibles();
  const int v = static_cast<int>(g.vertices.size());

  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (!g.vertices[i].proper_subset_of(g.vertices[j])) continue;
      bool covering = true;
      for (int k = 0; k < v; ++k) {
        if (g.vertices[i].proper_subset_of(g.vertices[k]) &&
            g.vertices[k].proper_subset_of(g.vertices[j])) {
          covering = false;
          break;
        }
      }
      if (covering) g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());

  // Vertices are size-lex sorted, so every edge points forward and a single
  // sweep computes longest paths.
  std::vector<int> dist(static_cast<std::size_t>(v), 0);
  for (const auto& [a, b] : g.edges)
    dist[static_cast<std::size_t>(b)] = std::max(
        dist[static_cast<std::size_t>(b)], dist[static_cast<std::size_t>(a)] + 1);
  g.longest_path = v == 0 ? 0 : *std::max_element(dist.begin(), dist.end());
  return g;
}

std::string GenericGraph::to_dot() const {
  std::string out = "digraph generic_graph {\n  rankdir=BT;\n";
  for (const PointSet& v : vertices) out += "  \"" + v.labels() + "\";\n";
  for (const auto& [a, b] : edges) {
    out += "  \"" + vertices[static_cast<std::size_t>(a)].labels() +
           "\" -> \"" + vertices[static_cast<std::size_t>(b)].labels() +
           "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace connord
