#pragma once

#include <string>
#include <utility>
#include <vector>

#include "connord/space.hpp"

namespace connord {

/// DAG of the irreducible connected subsets under covering inclusion:
/// edge (a, b) iff a is strictly inside b with no irreducible strictly
/// between. Sources are exactly the singletons, and the longest directed
/// path length equals the order of the space.
struct GenericGraph {
  Family vertices;                         // size-lex sorted irreducibles
  std::vector<std::pair<int, int>> edges;  // (child, parent) vertex indices
  int longest_path = 0;                    // in edges

  /// Deterministic DOT digraph; vertex names are sorted label lists.
  std::string to_dot() const;
};

GenericGraph generic_graph(const ConnectivitySpace& space);

}  // namespace connord
