#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "connord/link.hpp"

namespace connord {

/// One crossing: explicit sign plus the four arc labels counterclockwise
/// from the incoming under-strand. arcs[0] -> arcs[2] is the under strand;
/// arcs[1] and arcs[3] carry the over strand (direction recoverable from
/// the component cycles).
struct Crossing {
  int sign = +1;  // +1 or -1
  std::array<int, 4> arcs{};
  bool operator==(const Crossing&) const = default;
};

/// Signed planar diagram code. components[i] is the cyclic arc list of
/// component i+1; arc labels are positive and appear exactly twice across
/// all crossings, or zero times for the single arc of a crossing-free
/// component.
struct PDCode {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;

  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int num_components() const { return static_cast<int>(components.size()); }

  bool operator==(const PDCode&) const = default;
};

/// Resolved incidence structure of a diagram.
struct PdIndex {
  struct Pass {
    int crossing = -1;
    bool under = false;
    int in_arc = 0;
    int out_arc = 0;
  };
  /// Position (1 or 3) of the incoming over-arc of each crossing.
  std::vector<int> over_in_pos;
  /// arc label -> 1-based component id.
  std::vector<int> arc_component;
  /// passes[c][t] sits between components[c][t] and components[c][t+1].
  std::vector<std::vector<Pass>> passes;

  int component_of(int arc) const { return arc_component[arc]; }
};

/// Builds the incidence index, verifying well-formedness: arc labels
/// positive and used exactly twice (or zero times for a lone arc), the
/// components partition the arcs, and every cycle traverses crossing
/// passes consistently. Throws std::invalid_argument otherwise.
PdIndex index_pd(const PDCode& pd);

inline void check_pd(const PDCode& pd) { (void)index_pd(pd); }

/// matrix[i][j] = half the signed count of crossings between components i
/// and j. Throws std::invalid_argument on malformed diagrams or when a
/// half-sum is not integral.
LinkingMatrix linking_matrix_of_pd(const PDCode& pd);

/// Removes component c (1-based) and every crossing it meets, reconnecting
/// the severed arcs of the remaining components in cyclic order and
/// relabeling arcs consecutively. Remaining components keep their relative
/// order. Throws std::invalid_argument for an unknown component.
PDCode delete_component(const PDCode& pd, int c);

struct ReduceMove {
  enum class Kind { R1, R2 };
  Kind kind = Kind::R1;
  int c1 = -1;  // crossing index
  int c2 = -1;  // second crossing for R2
  bool operator==(const ReduceMove&) const = default;
};

/// Faces of the planar embedding encoded by the counterclockwise crossing
/// tuples (crossing-free circles not counted). A connected diagram with V
/// crossings is planar-consistent iff this returns V + 2.
int count_faces(const PDCode& pd);

/// All currently applicable Reidemeister I and II removals. R1 is a monogon
/// face; R2 is a bigon face whose crossings have opposite signs, one
/// boundary arc running under both and the other over both.
std::vector<ReduceMove> find_reduction_moves(const PDCode& pd);

PDCode apply_reduction_move(const PDCode& pd, const ReduceMove& move);

/// Greedily applies R1/R2 removals until none applies. Never increases the
/// crossing count. A zero-crossing result certifies a split union of
/// unknots; anything else certifies nothing.
PDCode reduce_pd(const PDCode& pd);

/// Text form: one `X[+](a,b,c,d)` or `X[-](a,b,c,d)` line per crossing,
/// then `C<i>: a1 a2 ... ak` per component. `#` comments and blank lines
/// are ignored on input.
std::string pd_to_text(const PDCode& pd);
PDCode pd_from_text(std::istream& in);
PDCode pd_from_text(const std::string& text);

}  // namespace connord
