#include "connord/pd.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "pd_internal.hpp"

namespace connord {

namespace {

constexpr int kMaxArcLabel = 1 << 20;

struct Occurrence {
  int crossing;
  int slot;  // 0..3
};

[[noreturn]] void malformed(const std::string& why) {
  throw std::invalid_argument("malformed diagram: " + why);
}

}  // namespace

PdIndex index_pd(const PDCode& pd) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int ci = 0; ci < pd.num_crossings(); ++ci) {
    const Crossing& x = pd.crossings[static_cast<std::size_t>(ci)];
    if (x.sign != 1 && x.sign != -1) malformed("crossing sign must be +1 or -1");
    for (int slot = 0; slot < 4; ++slot) {
      const int arc = x.arcs[static_cast<std::size_t>(slot)];
      if (arc < 1 || arc > kMaxArcLabel) malformed("arc label out of range");
      occ[arc].push_back({ci, slot});
    }
  }

  std::map<int, int> arc_comp;
  for (int c = 0; c < pd.num_components(); ++c) {
    const auto& cycle = pd.components[static_cast<std::size_t>(c)];
    if (cycle.empty()) malformed("component " + std::to_string(c + 1) + " has no arcs");
    for (int arc : cycle) {
      if (arc < 1 || arc > kMaxArcLabel) malformed("arc label out of range");
      if (!arc_comp.emplace(arc, c + 1).second)
        malformed("arc " + std::to_string(arc) + " listed twice");
    }
  }
  for (const auto& [arc, uses] : occ) {
    if (!arc_comp.count(arc))
      malformed("arc " + std::to_string(arc) + " is on no component");
    if (uses.size() != 2)
      malformed("arc " + std::to_string(arc) + " has " +
                std::to_string(uses.size()) + " crossing ends, expected 2");
  }

  PdIndex index;
  index.over_in_pos.assign(static_cast<std::size_t>(pd.num_crossings()), 1);
  index.passes.resize(static_cast<std::size_t>(pd.num_components()));
  const int max_arc = arc_comp.empty() ? 0 : arc_comp.rbegin()->first;
  index.arc_component.assign(static_cast<std::size_t>(max_arc) + 1, 0);
  for (const auto& [arc, comp] : arc_comp)
    index.arc_component[static_cast<std::size_t>(arc)] = comp;

  std::vector<bool> under_used(static_cast<std::size_t>(pd.num_crossings()));
  std::vector<bool> over_used(static_cast<std::size_t>(pd.num_crossings()));

  // Walk each cycle, matching every consecutive arc pair to an unused
  // crossing pass. Ambiguous matches are rare (tiny diagrams); a local
  // backtracking search resolves them.
  for (int c = 0; c < pd.num_components(); ++c) {
    const auto& cycle = pd.components[static_cast<std::size_t>(c)];
    const std::size_t t = cycle.size();
    if (t == 1 && !occ.count(cycle[0])) continue;  // crossing-free circle

    auto candidates = [&](int x, int y) {
      std::vector<PdIndex::Pass> out;
      for (const Occurrence& o : occ[x]) {
        const Crossing& cr = pd.crossings[static_cast<std::size_t>(o.crossing)];
        if (o.slot == 0 && cr.arcs[2] == y && !under_used[static_cast<std::size_t>(o.crossing)])
          out.push_back({o.crossing, true, x, y});
        if (o.slot == 1 && cr.arcs[3] == y && !over_used[static_cast<std::size_t>(o.crossing)])
          out.push_back({o.crossing, false, x, y});
        if (o.slot == 3 && cr.arcs[1] == y && !over_used[static_cast<std::size_t>(o.crossing)])
          out.push_back({o.crossing, false, x, y});
      }
      return out;
    };
    auto in_pos_of = [&](const PdIndex::Pass& p) {
      const Crossing& cr = pd.crossings[static_cast<std::size_t>(p.crossing)];
      return cr.arcs[1] == p.in_arc && cr.arcs[3] == p.out_arc ? 1 : 3;
    };

    std::vector<PdIndex::Pass> walk(t);
    auto search = [&](auto&& self, std::size_t i) -> bool {
      if (i == t) return true;
      const int x = cycle[i];
      const int y = cycle[(i + 1) % t];
      for (const PdIndex::Pass& p : candidates(x, y)) {
        auto& used = p.under ? under_used : over_used;
        used[static_cast<std::size_t>(p.crossing)] = true;
        walk[i] = p;
        if (self(self, i + 1)) return true;
        used[static_cast<std::size_t>(p.crossing)] = false;
      }
      return false;
    };
    if (!search(search, 0))
      malformed("component " + std::to_string(c + 1) +
                " does not traverse the crossings consistently");
    for (const PdIndex::Pass& p : walk)
      if (!p.under)
        index.over_in_pos[static_cast<std::size_t>(p.crossing)] = in_pos_of(p);
    index.passes[static_cast<std::size_t>(c)] = std::move(walk);
  }

  for (int ci = 0; ci < pd.num_crossings(); ++ci) {
    if (!under_used[static_cast<std::size_t>(ci)] ||
        !over_used[static_cast<std::size_t>(ci)])
      malformed("crossing " + std::to_string(ci + 1) +
                " is not traversed by the components");
  }
  return index;
}

LinkingMatrix linking_matrix_of_pd(const PDCode& pd) {
  const PdIndex index = index_pd(pd);
  const int m = pd.num_components();
  LinkingMatrix out(m);
  std::vector<std::vector<int>> acc(
      static_cast<std::size_t>(m) + 1,
      std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
  for (const Crossing& x : pd.crossings) {
    const int cu = index.component_of(x.arcs[0]);
    const int co = index.component_of(x.arcs[1]);
    if (cu == co) continue;
    acc[static_cast<std::size_t>(cu)][static_cast<std::size_t>(co)] += x.sign;
    acc[static_cast<std::size_t>(co)][static_cast<std::size_t>(cu)] += x.sign;
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const int s = acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (s % 2 != 0)
        malformed("odd signed crossing count between components " +
                  std::to_string(i) + " and " + std::to_string(j));
      out.set(i, j, s / 2);
    }
  }
  return out;
}

namespace detail {

// Relabels arcs 1,2,... consecutively along each component in turn.
PDCode relabel_arcs(const PDCode& pd) {
  std::map<int, int> fresh;
  int next = 1;
  PDCode out = pd;
  for (auto& cycle : out.components)
    for (int& arc : cycle) {
      fresh[arc] = next;
      arc = next++;
    }
  for (Crossing& x : out.crossings)
    for (int& arc : x.arcs) arc = fresh.at(arc);
  return out;
}

// Removes the flagged crossings and reconnects every component: surviving
// passes keep their cyclic order and the arcs between them fuse. A
// component left with no passes becomes a crossing-free circle.
PDCode drop_crossings(const PDCode& pd, const std::vector<bool>& removed) {
  const PdIndex index = index_pd(pd);
  PDCode out;
  std::vector<int> new_ci(static_cast<std::size_t>(pd.num_crossings()), -1);
  for (int ci = 0; ci < pd.num_crossings(); ++ci) {
    if (removed[static_cast<std::size_t>(ci)]) continue;
    new_ci[static_cast<std::size_t>(ci)] = out.num_crossings();
    out.crossings.push_back(pd.crossings[static_cast<std::size_t>(ci)]);
  }

  int next_arc = 1;
  for (int c = 0; c < pd.num_components(); ++c) {
    std::vector<PdIndex::Pass> live;
    for (const PdIndex::Pass& p : index.passes[static_cast<std::size_t>(c)])
      if (!removed[static_cast<std::size_t>(p.crossing)]) live.push_back(p);
    if (live.empty()) {
      out.components.push_back({next_arc++});
      continue;
    }
    const std::size_t t = live.size();
    std::vector<int> cycle(t);
    for (std::size_t i = 0; i < t; ++i) cycle[i] = next_arc++;
    for (std::size_t i = 0; i < t; ++i) {
      const PdIndex::Pass& p = live[i];
      Crossing& x = out.crossings[static_cast<std::size_t>(
          new_ci[static_cast<std::size_t>(p.crossing)])];
      const int in_arc = cycle[i];
      const int out_arc = cycle[(i + 1) % t];
      if (p.under) {
        x.arcs[0] = in_arc;
        x.arcs[2] = out_arc;
      } else {
        const int pos = index.over_in_pos[static_cast<std::size_t>(p.crossing)];
        x.arcs[static_cast<std::size_t>(pos)] = in_arc;
        x.arcs[static_cast<std::size_t>(4 - pos)] = out_arc;
      }
    }
    out.components.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace detail

using detail::drop_crossings;
using detail::relabel_arcs;

PDCode delete_component(const PDCode& pd, int c) {
  if (c < 1 || c > pd.num_components())
    throw std::invalid_argument("unknown component " + std::to_string(c));
  const PdIndex index = index_pd(pd);
  std::vector<bool> removed(static_cast<std::size_t>(pd.num_crossings()), false);
  for (int ci = 0; ci < pd.num_crossings(); ++ci) {
    const Crossing& x = pd.crossings[static_cast<std::size_t>(ci)];
    if (index.component_of(x.arcs[0]) == c || index.component_of(x.arcs[1]) == c)
      removed[static_cast<std::size_t>(ci)] = true;
  }
  PDCode out = drop_crossings(pd, removed);
  out.components.erase(out.components.begin() + (c - 1));
  return relabel_arcs(out);
}

namespace {

// Arc end = (crossing, slot). The tuples are counterclockwise rotations, so
// faces of the diagram are orbits of "arrive at an end, turn to the next
// slot, traverse that arc".
struct EndMap {
  // arc -> its (at most two) ends
  std::map<int, std::vector<std::pair<int, int>>> ends;

  explicit EndMap(const PDCode& pd) {
    for (int ci = 0; ci < pd.num_crossings(); ++ci)
      for (int slot = 0; slot < 4; ++slot)
        ends[pd.crossings[static_cast<std::size_t>(ci)]
                 .arcs[static_cast<std::size_t>(slot)]]
            .emplace_back(ci, slot);
  }

  std::pair<int, int> other_end(int arc, std::pair<int, int> end) const {
    const auto& e = ends.at(arc);
    return e[0] == end ? e[1] : e[0];
  }
};

// Directed side of an arc, identified by the end it is heading toward.
struct Side {
  int arc;
  std::pair<int, int> to;
  bool operator==(const Side&) const = default;
  auto operator<=>(const Side&) const = default;
};

Side next_side(const PDCode& pd, const EndMap& ends, Side s) {
  const auto [ci, slot] = s.to;
  const int turn = (slot + 1) % 4;
  const int arc = pd.crossings[static_cast<std::size_t>(ci)]
                      .arcs[static_cast<std::size_t>(turn)];
  return {arc, ends.other_end(arc, {ci, turn})};
}

bool under_slot(int slot) { return slot == 0 || slot == 2; }

}  // namespace

int count_faces(const PDCode& pd) {
  const EndMap ends(pd);
  std::set<Side> seen;
  int faces = 0;
  for (const auto& [arc, e] : ends.ends) {
    for (const auto& end : e) {
      const Side start{arc, end};
      if (seen.count(start)) continue;
      ++faces;
      Side s = start;
      do {
        seen.insert(s);
        s = next_side(pd, ends, s);
      } while (s != start);
    }
  }
  return faces;
}

std::vector<ReduceMove> find_reduction_moves(const PDCode& pd) {
  std::vector<ReduceMove> moves;
  // R1: a monogon, i.e. a loop arc occupying two adjacent slots.
  for (int ci = 0; ci < pd.num_crossings(); ++ci) {
    const auto& a = pd.crossings[static_cast<std::size_t>(ci)].arcs;
    for (int pos = 0; pos < 4; ++pos) {
      if (a[static_cast<std::size_t>(pos)] ==
          a[static_cast<std::size_t>((pos + 1) % 4)]) {
        moves.push_back({ReduceMove::Kind::R1, ci, -1});
        break;
      }
    }
  }
  // R2: a bigon face whose two crossings have opposite signs, with one arc
  // running under both and the other over both.
  const EndMap ends(pd);
  std::set<std::pair<int, int>> found;
  for (const auto& [arc, e] : ends.ends) {
    for (const auto& end : e) {
      const Side s0{arc, end};
      const Side s1 = next_side(pd, ends, s0);
      if (s1 == s0 || next_side(pd, ends, s1) != s0) continue;
      const int u = s0.arc, v = s1.arc;
      if (u == v) continue;
      const int ci = s0.to.first, cj = s1.to.first;
      if (ci == cj) continue;
      if (pd.crossings[static_cast<std::size_t>(ci)].sign +
              pd.crossings[static_cast<std::size_t>(cj)].sign !=
          0)
        continue;
      const auto& ue = ends.ends.at(u);
      const auto& ve = ends.ends.at(v);
      const bool u_under = under_slot(ue[0].second) && under_slot(ue[1].second);
      const bool u_over = !under_slot(ue[0].second) && !under_slot(ue[1].second);
      const bool v_under = under_slot(ve[0].second) && under_slot(ve[1].second);
      const bool v_over = !under_slot(ve[0].second) && !under_slot(ve[1].second);
      if (!((u_under && v_over) || (u_over && v_under))) continue;
      if (found.emplace(std::min(ci, cj), std::max(ci, cj)).second)
        moves.push_back({ReduceMove::Kind::R2, std::min(ci, cj),
                         std::max(ci, cj)});
    }
  }
  return moves;
}

PDCode apply_reduction_move(const PDCode& pd, const ReduceMove& move) {
  std::vector<bool> removed(static_cast<std::size_t>(pd.num_crossings()), false);
  if (move.c1 < 0 || move.c1 >= pd.num_crossings())
    throw std::invalid_argument("reduction move out of range");
  removed[static_cast<std::size_t>(move.c1)] = true;
  if (move.kind == ReduceMove::Kind::R2) {
    if (move.c2 < 0 || move.c2 >= pd.num_crossings() || move.c2 == move.c1)
      throw std::invalid_argument("reduction move out of range");
    removed[static_cast<std::size_t>(move.c2)] = true;
  }
  return relabel_arcs(drop_crossings(pd, removed));
}

PDCode reduce_pd(const PDCode& pd) {
  PDCode current = pd;
  check_pd(current);
  for (;;) {
    const std::vector<ReduceMove> moves = find_reduction_moves(current);
    if (moves.empty()) return current;
    current = apply_reduction_move(current, moves.front());
  }
}

std::string pd_to_text(const PDCode& pd) {
  std::string out;
  for (const Crossing& x : pd.crossings) {
    out += x.sign > 0 ? "X[+](" : "X[-](";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) out += ',';
      out += std::to_string(x.arcs[i]);
    }
    out += ")\n";
  }
  for (int c = 0; c < pd.num_components(); ++c) {
    out += "C" + std::to_string(c + 1) + ":";
    for (int arc : pd.components[static_cast<std::size_t>(c)])
      out += " " + std::to_string(arc);
    out += "\n";
  }
  return out;
}

namespace {

[[noreturn]] void bad_pd_line(int lineno, const std::string& line) {
  throw std::invalid_argument("pd text line " + std::to_string(lineno) +
                              ": cannot parse '" + line + "'");
}

}  // namespace

PDCode pd_from_text(std::istream& in) {
  PDCode pd;
  std::map<int, std::vector<int>> comps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'X') {
      int sign = 0;
      std::array<int, 4> arcs{};
      char l = 0, s = 0, r = 0, open = 0, c1 = 0, c2 = 0, c3 = 0, close = 0;
      std::istringstream fields(line.substr(i + 1));
      fields >> l >> s >> r >> open >> arcs[0] >> c1 >> arcs[1] >> c2 >>
          arcs[2] >> c3 >> arcs[3] >> close;
      if (!fields || l != '[' || (s != '+' && s != '-') || r != ']' ||
          open != '(' || c1 != ',' || c2 != ',' || c3 != ',' || close != ')')
        bad_pd_line(lineno, line);
      std::string rest;
      if (fields >> rest) bad_pd_line(lineno, line);
      sign = s == '+' ? 1 : -1;
      pd.crossings.push_back({sign, arcs});
    } else if (line[i] == 'C') {
      const std::size_t colon = line.find(':', i);
      if (colon == std::string::npos) bad_pd_line(lineno, line);
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(line.substr(i + 1, colon - i - 1), &used);
        if (i + 1 + used != colon) bad_pd_line(lineno, line);
      } catch (const std::exception&) {
        bad_pd_line(lineno, line);
      }
      if (id < 1 || comps.count(id)) bad_pd_line(lineno, line);
      std::istringstream fields(line.substr(colon + 1));
      std::vector<int> arcs;
      int arc = 0;
      while (fields >> arc) arcs.push_back(arc);
      if (!fields.eof()) bad_pd_line(lineno, line);
      comps.emplace(id, std::move(arcs));
    } else {
      bad_pd_line(lineno, line);
    }
  }
  int expect = 1;
  for (const auto& [id, arcs] : comps) {
    if (id != expect++)
      throw std::invalid_argument("component lines must be numbered 1.." +
                                  std::to_string(comps.size()));
    pd.components.push_back(arcs);
  }
  check_pd(pd);
  return pd;
}

PDCode pd_from_text(const std::string& text) {
  std::istringstream in(text);
  return pd_from_text(in);
}

}  // namespace connord
