#include "connord/assembly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <cstdlib>
#include <stdexcept>

#include "pd_internal.hpp"

namespace connord {

std::string TreeLikeViolation::describe() const {
  return "node " + node.to_string() + " has overlapping children " +
         child_a.to_string() + " and " + child_b.to_string();
}

namespace {

PDCode unknot() {
  PDCode pd;
  pd.components = {{1}};
  return pd;
}

// Positive Hopf link; both crossings +1, linking number +1.
PDCode hopf() {
  PDCode pd;
  pd.crossings = {{+1, {1, 3, 2, 4}}, {+1, {4, 2, 3, 1}}};
  pd.components = {{1, 2}, {3, 4}};
  return pd;
}

// Standard alternating 6-crossing Borromean diagram. Component i runs over
// component i+1 at the two crossings A_i (+1) and B_i (-1); along each
// circle the passes alternate: over A_i, under B_{i-1}, over B_i, under
// A_{i-1}. Arc t of component i is 4(i-1)+t.
PDCode borromean() {
  auto arc = [](int comp, int t) { return 4 * ((comp - 1) % 3) + t; };
  PDCode pd;
  for (int i = 1; i <= 3; ++i) {
    const int nxt = i % 3 + 1;
    pd.crossings.push_back(
        {+1, {arc(nxt, 4), arc(i, 1), arc(nxt, 1), arc(i, 2)}});
    pd.crossings.push_back(
        {-1, {arc(nxt, 2), arc(i, 4), arc(nxt, 3), arc(i, 3)}});
  }
  for (int i = 1; i <= 3; ++i)
    pd.components.push_back({arc(i, 1), arc(i, 2), arc(i, 3), arc(i, 4)});
  return pd;
}

// ---- braid plumbing for the k >= 4 blocks ----------------------------

struct BraidLetter {
  int pos;   // acts on strands at positions pos, pos+1
  int sign;  // +1: left strand over; -1: left strand under
};

using BraidWord = std::vector<BraidLetter>;

BraidWord inverse(const BraidWord& word) {
  BraidWord out(word.rbegin(), word.rend());
  for (BraidLetter& l : out) l.sign = -l.sign;
  return out;
}

void append(BraidWord& word, const BraidWord& tail) {
  word.insert(word.end(), tail.begin(), tail.end());
}

// Cancels sigma pairs of opposite sign whenever no letter between them (in
// the cyclic word) touches their positions; these are exactly the bigons of
// the closed diagram, so the emitted block is R1/R2-irreducible.
void reduce_braid_word(BraidWord& word) {
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t span = 1; span < n && !changed; ++span) {
        const std::size_t j = (i + span) % n;
        if (word[i].pos != word[j].pos || word[i].sign + word[j].sign != 0)
          continue;
        bool clear = true;
        for (std::size_t t = (i + 1) % n; t != j; t = (t + 1) % n) {
          if (std::abs(word[t].pos - word[i].pos) <= 1) {
            clear = false;
            break;
          }
        }
        if (!clear) continue;
        BraidWord next;
        for (std::size_t t = 0; t < n; ++t)
          if (t != i && t != j) next.push_back(word[t]);
        word = std::move(next);
        changed = true;
      }
    }
  }
}

// Trace closure of a braid whose permutation is the identity; strand s is
// component s. The crossing tuples carry the honest counterclockwise
// rotation of the drawn braid, so faces and planarity come out right.
PDCode braid_closure(int strands, const BraidWord& word) {
  PDCode pd;
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(strands));
  std::vector<int> strand_at(static_cast<std::size_t>(strands) + 1);
  std::vector<int> arc_at(static_cast<std::size_t>(strands) + 1);
  for (int p = 1; p <= strands; ++p) {
    strand_at[static_cast<std::size_t>(p)] = p;
    arc_at[static_cast<std::size_t>(p)] = p;
    lists[static_cast<std::size_t>(p) - 1] = {p};
  }
  int next_arc = strands + 1;
  for (const BraidLetter& l : word) {
    const int a = l.pos;
    const int under_pos = l.sign > 0 ? a + 1 : a;
    const int over_pos = l.sign > 0 ? a : a + 1;
    const int uin = arc_at[static_cast<std::size_t>(under_pos)];
    const int oin = arc_at[static_cast<std::size_t>(over_pos)];
    const int uout = next_arc++;
    const int oout = next_arc++;
    if (l.sign > 0)
      pd.crossings.push_back({+1, {uin, oin, uout, oout}});
    else
      pd.crossings.push_back({-1, {uin, oout, uout, oin}});
    lists[static_cast<std::size_t>(
              strand_at[static_cast<std::size_t>(under_pos)]) -
          1]
        .push_back(uout);
    lists[static_cast<std::size_t>(
              strand_at[static_cast<std::size_t>(over_pos)]) -
          1]
        .push_back(oout);
    // Both strands head downward and trade places.
    std::swap(strand_at[static_cast<std::size_t>(a)],
              strand_at[static_cast<std::size_t>(a) + 1]);
    arc_at[static_cast<std::size_t>(a) + 1] =
        l.sign > 0 ? oout : uout;  // the left strand lands on the right
    arc_at[static_cast<std::size_t>(a)] = l.sign > 0 ? uout : oout;
  }
  for (int p = 1; p <= strands; ++p) {
    assert(strand_at[static_cast<std::size_t>(p)] == p);
    const int last = arc_at[static_cast<std::size_t>(p)];
    if (last == p) continue;  // no crossings on this strand
    for (Crossing& x : pd.crossings)
      for (int& arc : x.arcs)
        if (arc == last) arc = p;
    lists[static_cast<std::size_t>(p) - 1].pop_back();
  }
  pd.components = std::move(lists);
  return pd;
}

// k >= 4: Milnor-style Brunnian block. Components 1..k-1 are parallel
// trivial rings; component k follows the iterated commutator
// [x_{k-1}, [x_{k-2}, [... [x_2, x_1]...]]] of loops x_i through ring i.
// Every exponent sum vanishes, so all linking numbers are zero, and erasing
// any component collapses the commutator by adjacent cancellations, each of
// which is a bigon move.
PDCode milnor_block(int k) {
  // Loop of the last strand once around ring i.
  auto ring_loop = [k](int i) {
    BraidWord w;
    for (int t = k - 1; t > i; --t) w.push_back({t, +1});
    w.push_back({i, +1});
    w.push_back({i, +1});
    for (int t = i + 1; t <= k - 1; ++t) w.push_back({t, -1});
    return w;
  };
  // Abstract commutator word over ring indices, then spelled out.
  std::vector<std::pair<int, int>> abstract{{1, +1}};
  for (int j = 2; j <= k - 1; ++j) {
    std::vector<std::pair<int, int>> next{{j, +1}};
    next.insert(next.end(), abstract.begin(), abstract.end());
    next.push_back({j, -1});
    for (auto it = abstract.rbegin(); it != abstract.rend(); ++it)
      next.emplace_back(it->first, -it->second);
    abstract = std::move(next);
  }
  BraidWord word;
  for (const auto& [ring, exp] : abstract) {
    const BraidWord loop = ring_loop(ring);
    append(word, exp > 0 ? loop : inverse(loop));
  }
  reduce_braid_word(word);
  return detail::relabel_arcs(braid_closure(k, word));
}

}  // namespace

PDCode brunnian_block(int k) {
  if (k < 1 || k > 16)
    throw std::invalid_argument("block size must be in 1..16, got " +
                                std::to_string(k));
  if (k == 1) return unknot();
  if (k == 2) return hopf();
  if (k == 3) return borromean();
  return milnor_block(k);
}

namespace {

Family covering_children(const Family& irr, PointSet k) {
  Family out;
  for (PointSet i : irr) {
    if (!i.proper_subset_of(k)) continue;
    bool covered = false;
    for (PointSet j : irr) {
      if (i.proper_subset_of(j) && j.proper_subset_of(k)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(i);
  }
  std::sort(out.begin(), out.end(),
            [](PointSet a, PointSet b) { return a.min_point() < b.min_point(); });
  return out;
}

// Children are pairwise disjoint or the build fails with the offending pair.
bool build_node(const Family& irr, PointSet points, AssemblyNode& node,
                TreeLikeViolation& violation) {
  node.points = points;
  if (points.size() == 1) return true;
  const Family children = covering_children(irr, points);
  for (std::size_t i = 0; i < children.size(); ++i) {
    for (std::size_t j = i + 1; j < children.size(); ++j) {
      if (children[i].intersects(children[j])) {
        violation = {points, children[i], children[j]};
        return false;
      }
    }
  }
  for (PointSet c : children) {
    AssemblyNode child;
    if (!build_node(irr, c, child, violation)) return false;
    node.children.push_back(std::move(child));
  }
  return true;
}

}  // namespace

AssemblyResult assembly_from_space(const ConnectivitySpace& space) {
  const Family irr = space.irreducibles();
  Family maximal;
  for (PointSet i : irr) {
    bool covered = false;
    for (PointSet j : irr) {
      if (i.proper_subset_of(j)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(i);
  }

  AssemblyResult result;
  TreeLikeViolation violation;
  const PointSet ground = PointSet::first_n(space.ground_size());
  AssemblyTree tree;
  tree.ground_size = space.ground_size();

  if (maximal.size() == 1) {
    assert(maximal.front() == ground);
    if (!build_node(irr, ground, tree.root, violation)) {
      result.violation = violation;
      return result;
    }
  } else {
    tree.virtual_root = true;
    tree.root.points = ground;
    std::sort(maximal.begin(), maximal.end(), [](PointSet a, PointSet b) {
      return a.min_point() < b.min_point();
    });
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      for (std::size_t j = i + 1; j < maximal.size(); ++j) {
        if (maximal[i].intersects(maximal[j])) {
          result.violation = TreeLikeViolation{ground, maximal[i], maximal[j]};
          return result;
        }
      }
    }
    for (PointSet m : maximal) {
      AssemblyNode child;
      if (!build_node(irr, m, child, violation)) {
        result.violation = violation;
        return result;
      }
      tree.root.children.push_back(std::move(child));
    }
  }
  result.tree = std::move(tree);
  return result;
}

namespace {

struct Emitted {
  PDCode pd;
  std::vector<int> over_in_pos;  // aligned with pd.crossings
  std::vector<int> leaf_points;  // aligned with pd.components
};

// Unique slot where `arc` enters a crossing (under-in or over-in).
std::pair<int, int> find_in_slot(const std::vector<Crossing>& crossings,
                                 const std::vector<int>& over_in_pos,
                                 int arc) {
  for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
    if (crossings[ci].arcs[0] == arc) return {static_cast<int>(ci), 0};
    const int pos = over_in_pos[ci];
    if (crossings[ci].arcs[static_cast<std::size_t>(pos)] == arc)
      return {static_cast<int>(ci), pos};
  }
  assert(false && "arc has no incoming slot");
  return {-1, -1};
}

Emitted emit_node(const AssemblyNode& node, bool virtual_root, int& next_arc) {
  Emitted out;
  if (node.is_leaf()) {
    out.pd.components.push_back({next_arc++});
    out.leaf_points.push_back(node.points.min_point());
    return out;
  }

  std::vector<Emitted> children;
  children.reserve(node.children.size());
  for (const AssemblyNode& child : node.children)
    children.push_back(emit_node(child, false, next_arc));

  if (virtual_root) {  // split union, no joining block
    for (Emitted& child : children) {
      out.pd.crossings.insert(out.pd.crossings.end(),
                              child.pd.crossings.begin(),
                              child.pd.crossings.end());
      out.over_in_pos.insert(out.over_in_pos.end(), child.over_in_pos.begin(),
                             child.over_in_pos.end());
      out.pd.components.insert(out.pd.components.end(),
                               child.pd.components.begin(),
                               child.pd.components.end());
      out.leaf_points.insert(out.leaf_points.end(), child.leaf_points.begin(),
                             child.leaf_points.end());
    }
    return out;
  }

  const int c = static_cast<int>(node.children.size());
  const PDCode block = brunnian_block(c);
  const PdIndex bidx = index_pd(block);

  std::vector<int> width(static_cast<std::size_t>(c));
  for (int j = 0; j < c; ++j)
    width[static_cast<std::size_t>(j)] =
        node.children[static_cast<std::size_t>(j)].points.size();

  // Parallel copies of every block arc, one per strand of its component.
  std::map<int, std::vector<int>> copy;
  for (int j = 0; j < c; ++j) {
    for (int a : block.components[static_cast<std::size_t>(j)]) {
      auto& ids = copy[a];
      for (int s = 0; s < width[static_cast<std::size_t>(j)]; ++s)
        ids.push_back(next_arc++);
    }
  }

  // Each block crossing expands into a width x width grid. Intermediate
  // arcs subdivide every strand while it runs through the grid.
  const int bc_count = block.num_crossings();
  std::vector<int> under_comp(static_cast<std::size_t>(bc_count));
  std::vector<int> over_comp(static_cast<std::size_t>(bc_count));
  std::vector<std::vector<std::vector<int>>> inter_u(
      static_cast<std::size_t>(bc_count));
  std::vector<std::vector<std::vector<int>>> inter_o(
      static_cast<std::size_t>(bc_count));
  for (int bc = 0; bc < bc_count; ++bc) {
    const Crossing& bx = block.crossings[static_cast<std::size_t>(bc)];
    const int oip = bidx.over_in_pos[static_cast<std::size_t>(bc)];
    const int ju = bidx.component_of(bx.arcs[0]) - 1;
    const int jo =
        bidx.component_of(bx.arcs[static_cast<std::size_t>(oip)]) - 1;
    under_comp[static_cast<std::size_t>(bc)] = ju;
    over_comp[static_cast<std::size_t>(bc)] = jo;
    const int wu = width[static_cast<std::size_t>(ju)];
    const int wo = width[static_cast<std::size_t>(jo)];
    auto& iu = inter_u[static_cast<std::size_t>(bc)];
    iu.resize(static_cast<std::size_t>(wu));
    for (auto& per_strand : iu)
      for (int g = 0; g < wo - 1; ++g) per_strand.push_back(next_arc++);
    auto& io = inter_o[static_cast<std::size_t>(bc)];
    io.resize(static_cast<std::size_t>(wo));
    for (auto& per_strand : io)
      for (int g = 0; g < wu - 1; ++g) per_strand.push_back(next_arc++);
  }

  for (int bc = 0; bc < bc_count; ++bc) {
    const Crossing& bx = block.crossings[static_cast<std::size_t>(bc)];
    const int oip = bidx.over_in_pos[static_cast<std::size_t>(bc)];
    const int ju = under_comp[static_cast<std::size_t>(bc)];
    const int jo = over_comp[static_cast<std::size_t>(bc)];
    const int wu = width[static_cast<std::size_t>(ju)];
    const int wo = width[static_cast<std::size_t>(jo)];
    const auto& iu = inter_u[static_cast<std::size_t>(bc)];
    const auto& io = inter_o[static_cast<std::size_t>(bc)];
    const int a_uin = bx.arcs[0], a_uout = bx.arcs[2];
    const int a_oin = bx.arcs[static_cast<std::size_t>(oip)];
    const int a_oout = bx.arcs[static_cast<std::size_t>(4 - oip)];
    for (int su = 0; su < wu; ++su) {
      for (int so = 0; so < wo; ++so) {
        Crossing cell;
        cell.sign = bx.sign;
        cell.arcs[0] = so == 0 ? copy[a_uin][static_cast<std::size_t>(su)]
                               : iu[static_cast<std::size_t>(su)]
                                   [static_cast<std::size_t>(so - 1)];
        cell.arcs[2] = so == wo - 1 ? copy[a_uout][static_cast<std::size_t>(su)]
                                    : iu[static_cast<std::size_t>(su)]
                                        [static_cast<std::size_t>(so)];
        const int oin = su == 0 ? copy[a_oin][static_cast<std::size_t>(so)]
                                : io[static_cast<std::size_t>(so)]
                                    [static_cast<std::size_t>(su - 1)];
        const int oout = su == wu - 1
                             ? copy[a_oout][static_cast<std::size_t>(so)]
                             : io[static_cast<std::size_t>(so)]
                                 [static_cast<std::size_t>(su)];
        cell.arcs[static_cast<std::size_t>(oip)] = oin;
        cell.arcs[static_cast<std::size_t>(4 - oip)] = oout;
        out.pd.crossings.push_back(cell);
        out.over_in_pos.push_back(oip);
      }
    }
  }

  // Cable strands: a copy of the block component's cycle with grid
  // intermediates, one per leaf of the corresponding child.
  for (int j = 0; j < c; ++j) {
    Emitted& child = children[static_cast<std::size_t>(j)];
    const int child_crossing_base = static_cast<int>(out.pd.crossings.size());
    out.pd.crossings.insert(out.pd.crossings.end(),
                            child.pd.crossings.begin(),
                            child.pd.crossings.end());
    out.over_in_pos.insert(out.over_in_pos.end(), child.over_in_pos.begin(),
                           child.over_in_pos.end());
    (void)child_crossing_base;

    for (int s = 0; s < width[static_cast<std::size_t>(j)]; ++s) {
      std::vector<int> strand;
      const auto& comp = block.components[static_cast<std::size_t>(j)];
      const auto& passes = bidx.passes[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < comp.size(); ++t) {
        strand.push_back(copy[comp[t]][static_cast<std::size_t>(s)]);
        const PdIndex::Pass& p = passes[t];
        if (p.under) {
          const auto& iu = inter_u[static_cast<std::size_t>(p.crossing)]
                                  [static_cast<std::size_t>(s)];
          strand.insert(strand.end(), iu.begin(), iu.end());
        } else {
          const auto& io = inter_o[static_cast<std::size_t>(p.crossing)]
                                  [static_cast<std::size_t>(s)];
          strand.insert(strand.end(), io.begin(), io.end());
        }
      }

      const std::vector<int>& cycle =
          child.pd.components[static_cast<std::size_t>(s)];
      if (cycle.size() == 1 && child.pd.crossings.empty()) {
        // Leaf strand: the cable itself is the component.
        out.pd.components.push_back(std::move(strand));
      } else {
        // Splice the child cycle into a crossing-free stretch of the cable:
        // cut the first arc of each and cross-join. Swapping the two
        // incoming slot references fuses the cycles without fresh labels.
        const auto [ci1, sl1] =
            find_in_slot(out.pd.crossings, out.over_in_pos, strand[0]);
        const auto [ci2, sl2] =
            find_in_slot(out.pd.crossings, out.over_in_pos, cycle[0]);
        out.pd.crossings[static_cast<std::size_t>(ci1)]
            .arcs[static_cast<std::size_t>(sl1)] = cycle[0];
        out.pd.crossings[static_cast<std::size_t>(ci2)]
            .arcs[static_cast<std::size_t>(sl2)] = strand[0];
        std::vector<int> merged;
        merged.push_back(strand[0]);
        merged.insert(merged.end(), cycle.begin() + 1, cycle.end());
        merged.push_back(cycle[0]);
        merged.insert(merged.end(), strand.begin() + 1, strand.end());
        out.pd.components.push_back(std::move(merged));
      }
      out.leaf_points.push_back(
          child.leaf_points[static_cast<std::size_t>(s)]);
    }
  }
  return out;
}

}  // namespace

PDCode pd_emit(const AssemblyTree& assembly) {
  int next_arc = 1;
  Emitted emitted = emit_node(assembly.root, assembly.virtual_root, next_arc);

  std::vector<std::size_t> order(emitted.pd.components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return emitted.leaf_points[a] < emitted.leaf_points[b];
  });

  PDCode out;
  out.crossings = std::move(emitted.pd.crossings);
  for (std::size_t i : order)
    out.components.push_back(std::move(emitted.pd.components[i]));
  return detail::relabel_arcs(out);
}

namespace {

void collect_node_sets(const AssemblyNode& node, Family& sets) {
  sets.push_back(node.points);
  for (const AssemblyNode& child : node.children)
    collect_node_sets(child, sets);
}

int predicted_lk(const AssemblyNode& node, bool virtual_root, int p, int q) {
  for (const AssemblyNode& child : node.children) {
    if (child.points.contains(p) && child.points.contains(q))
      return predicted_lk(child, false, p, q);
  }
  return !virtual_root && node.children.size() == 2 ? 1 : 0;
}

std::size_t crossing_count(const AssemblyNode& node, bool virtual_root) {
  if (node.is_leaf()) return 0;
  std::size_t total = 0;
  for (const AssemblyNode& child : node.children)
    total += crossing_count(child, false);
  if (virtual_root) return total;
  const int c = static_cast<int>(node.children.size());
  const PDCode block = brunnian_block(c);
  const PdIndex bidx = index_pd(block);
  for (int bc = 0; bc < block.num_crossings(); ++bc) {
    const Crossing& bx = block.crossings[static_cast<std::size_t>(bc)];
    const int oip = bidx.over_in_pos[static_cast<std::size_t>(bc)];
    const int ju = bidx.component_of(bx.arcs[0]) - 1;
    const int jo =
        bidx.component_of(bx.arcs[static_cast<std::size_t>(oip)]) - 1;
    total += static_cast<std::size_t>(
                 node.children[static_cast<std::size_t>(ju)].points.size()) *
             static_cast<std::size_t>(
                 node.children[static_cast<std::size_t>(jo)].points.size());
  }
  return total;
}

}  // namespace

ConnectivitySpace predicted_structure(const AssemblyTree& assembly) {
  Family sets;
  if (assembly.virtual_root) {
    for (const AssemblyNode& child : assembly.root.children)
      collect_node_sets(child, sets);
  } else {
    collect_node_sets(assembly.root, sets);
  }
  return generate(assembly.ground_size, sets);
}

LinkingMatrix predicted_linking_matrix(const AssemblyTree& assembly) {
  const int n = assembly.ground_size;
  LinkingMatrix out(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      out.set(p, q,
              predicted_lk(assembly.root, assembly.virtual_root, p, q));
  return out;
}

std::size_t predicted_crossing_count(const AssemblyTree& assembly) {
  return crossing_count(assembly.root, assembly.virtual_root);
}

}  // namespace connord
