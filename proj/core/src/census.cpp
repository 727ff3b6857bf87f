#include "connord/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "connord/assembly.hpp"
#include "connord/canonical.hpp"

namespace connord {

namespace {

void check_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("census requires n >= 1");
  if (n > cap)
    throw std::invalid_argument("census for n = " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(cap));
}

// Orderly depth-first enumeration over the non-singleton subsets in
// size-lex order. Including a set forces the unions it creates with every
// chosen intersecting set; forced indices always lie further along the
// order, so each union-closed family is reached exactly once.
template <typename Visit>
void enumerate_families(int n, Visit&& visit) {
  std::vector<PointSet> masks;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const PointSet s = PointSet::from_bits(bits);
    if (s.size() >= 2) masks.push_back(s);
  }
  std::sort(masks.begin(), masks.end(), SizeLexLess{});
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i].bits()] = i;

  const std::size_t m = masks.size();
  std::vector<bool> chosen(m, false);
  std::vector<int> forced(m, 0);
  std::vector<std::size_t> picks;

  auto self = [&](auto&& rec, std::size_t i) -> void {
    if (i == m) {
      Family family;
      for (int p = 1; p <= n; ++p) family.push_back(PointSet::single(p));
      for (std::size_t pick : picks) family.push_back(masks[pick]);
      normalize_family(family);
      visit(ConnectivitySpace::trusted(n, std::move(family)));
      return;
    }
    auto include = [&] {
      std::vector<std::size_t> trail;
      for (std::size_t pick : picks) {
        if (!masks[i].intersects(masks[pick])) continue;
        const PointSet u = masks[i] | masks[pick];
        if (u == masks[i] || u == masks[pick]) continue;
        const std::size_t k = index.at(u.bits());
        ++forced[k];
        trail.push_back(k);
      }
      chosen[i] = true;
      picks.push_back(i);
      rec(rec, i + 1);
      picks.pop_back();
      chosen[i] = false;
      for (std::size_t k : trail) --forced[k];
    };
    if (forced[i] > 0) {
      include();
    } else {
      rec(rec, i + 1);  // exclude
      include();
    }
  };
  self(self, 0);
}

}  // namespace

std::map<std::string, ClassStats> census_classes(int n,
                                                 std::uint64_t* labeled_count,
                                                 int cap) {
  check_cap(n, cap);
  std::map<std::string, ClassStats> classes;
  std::uint64_t labeled = 0;
  enumerate_families(n, [&](const ConnectivitySpace& space) {
    ++labeled;
    std::string canon = canonical_form(space);
    if (classes.count(canon)) return;
    ClassStats stats;
    stats.order = space.order();
    stats.tree_like = assembly_from_space(space).ok();
    stats.representative = space.structure();
    classes.emplace(std::move(canon), std::move(stats));
  });
  if (labeled_count) *labeled_count = labeled;
  return classes;
}

CensusReport enumerate_structures(int n, bool labeled, int cap) {
  check_cap(n, cap);
  CensusReport report;
  report.n = n;
  report.labeled = labeled;
  if (labeled) {
    enumerate_families(n, [&](const ConnectivitySpace& space) {
      ++report.labeled_count;
      ++report.order_histogram[space.order()];
      if (assembly_from_space(space).ok()) ++report.tree_like_count;
    });
    return report;
  }
  const auto classes = census_classes(n, &report.labeled_count, cap);
  for (const auto& [canon, stats] : classes) {
    report.iso_classes.push_back(canon);
    ++report.order_histogram[stats.order];
    if (stats.tree_like) ++report.tree_like_count;
  }
  return report;  // iso_classes comes out of a sorted map
}

ExtremalCheck extremal_check(int n, int cap) {
  check_cap(n, cap);
  const auto classes = census_classes(n, nullptr, cap);
  ExtremalCheck out;
  for (const auto& [canon, stats] : classes)
    if (stats.order == n - 1) out.witnesses.push_back(canon);
  out.unique_extremal = out.witnesses.size() == 1 &&
                        out.witnesses.front() == canonical_form(make_an(n));
  return out;
}

}  // namespace connord
