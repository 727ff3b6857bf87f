#pragma once

#include <optional>
#include <string>
#include <vector>

#include "connord/pd.hpp"
#include "connord/space.hpp"

namespace connord {

/// Node of a Brunnian assembly: an irreducible set whose children are its
/// covering children in the generic graph. Leaves are singletons.
struct AssemblyNode {
  PointSet points;
  std::vector<AssemblyNode> children;
  bool is_leaf() const { return children.empty(); }
};

struct AssemblyTree {
  AssemblyNode root;
  /// True when the space has several maximal irreducibles: the root is a
  /// placeholder listing them and emits no block of its own.
  bool virtual_root = false;
  int ground_size = 0;
  int leaf_count() const { return ground_size; }
};

struct TreeLikeViolation {
  PointSet node;
  PointSet child_a;
  PointSet child_b;
  std::string describe() const;
};

struct AssemblyResult {
  std::optional<AssemblyTree> tree;
  std::optional<TreeLikeViolation> violation;
  bool ok() const { return tree.has_value(); }
};

/// Hopf link for k=2, the cyclic rubber-band Brunnian diagram (2k
/// crossings, component i over component i+1 twice) for k>=3; k=3 is the
/// standard 6-crossing Borromean diagram. All pairwise linking numbers
/// vanish for k>=3 and deleting any single component leaves an
/// R2-reducible diagram.
PDCode brunnian_block(int k);

/// Builds the assembly whose nodes are the irreducibles and whose edges are
/// the covering relations. Fails with the offending node and pair when some
/// node's covering children overlap (the structure is not tree-like).
AssemblyResult assembly_from_space(const ConnectivitySpace& space);

/// Recursive emission: every node with k children instantiates
/// brunnian_block(k), cables each block component to the width of the
/// corresponding child and splices the child diagram into its cable. One
/// output component per leaf; component i carries point i.
PDCode pd_emit(const AssemblyTree& assembly);

/// The splittability structure the emitted link is designed to have:
/// closure of the assembly's node sets. Round trip:
/// predicted_structure(assembly_from_space(X)) == X.
ConnectivitySpace predicted_structure(const AssemblyTree& assembly);

/// Expected linking matrix of the emission: +1 between leaves whose lowest
/// common node is a 2-child block, 0 otherwise.
LinkingMatrix predicted_linking_matrix(const AssemblyTree& assembly);

/// Exact crossing count of pd_emit, computed from block sizes and cable
/// widths alone.
std::size_t predicted_crossing_count(const AssemblyTree& assembly);

}  // namespace connord
