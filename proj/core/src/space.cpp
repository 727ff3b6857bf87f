#include "connord/space.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

namespace connord {

std::string Violation::describe() const {
  switch (kind) {
    case Kind::EmptyMember:
      return "empty set is not a valid member";
    case Kind::MissingSingleton:
      return "missing singleton " + a.to_string();
    case Kind::MissingUnion:
      return "missing union " + (a | b).to_string() +
             " of intersecting pair " + a.to_string() + " and " +
             b.to_string();
  }
  return "unknown violation";
}

std::string ValidationReport::describe() const {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.describe();
  }
  return out;
}

namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("unsupported ground set size " +
                                std::to_string(n) + " (must be 1.." +
                                std::to_string(kMaxGroundSize) + ")");
}

void check_in_range(int n, const Family& sets) {
  const PointSet ground = PointSet::first_n(n);
  for (PointSet s : sets) {
    if (!s.subset_of(ground))
      throw std::invalid_argument("set " + s.to_string() +
                                  " contains points outside 1.." +
                                  std::to_string(n));
  }
}

}  // namespace

ValidationReport validate_structure(int n, const Family& sets) {
  check_ground_size(n);
  check_in_range(n, sets);

  Family family = sets;
  normalize_family(family);

  ValidationReport report;
  if (!family.empty() && family.front().empty()) {
    report.violations.push_back({Violation::Kind::EmptyMember, {}, {}});
    family.erase(family.begin());
  }
  for (int p = 1; p <= n; ++p) {
    if (!family_contains(family, PointSet::single(p)))
      report.violations.push_back(
          {Violation::Kind::MissingSingleton, PointSet::single(p), {}});
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const PointSet a = family[i], b = family[j];
      if (!a.intersects(b)) continue;
      if (!family_contains(family, a | b))
        report.violations.push_back({Violation::Kind::MissingUnion, a, b});
    }
  }
  return report;
}

ConnectivitySpace::ConnectivitySpace(int n, Family structure) {
  ValidationReport report = validate_structure(n, structure);
  if (!report.valid()) throw ValidationError(std::move(report));
  normalize_family(structure);
  n_ = n;
  structure_ = std::move(structure);
}

ConnectivitySpace ConnectivitySpace::trusted(int n,
                                             Family normalized_structure) {
  assert(validate_structure(n, normalized_structure).valid());
  ConnectivitySpace space;
  space.n_ = n;
  space.structure_ = std::move(normalized_structure);
  return space;
}

bool ConnectivitySpace::is_connected(PointSet a) const {
  if (!a.subset_of(PointSet::first_n(n_)))
    throw std::invalid_argument("set " + a.to_string() +
                                " is not a subset of the ground set");
  return family_contains(structure_, a);
}

Family ConnectivitySpace::components(PointSet a) const {
  if (a.empty()) return {};
  if (!a.subset_of(PointSet::first_n(n_)))
    throw std::invalid_argument("set " + a.to_string() +
                                " is not a subset of the ground set");
  // Maximal members inside `a`. Any member inside `a` that touches a block
  // is absorbed by it (its union with the block is connected and inside
  // `a`), so a descending-size scan only ever sees containment or
  // disjointness.
  Family blocks;
  for (auto it = structure_.rbegin(); it != structure_.rend(); ++it) {
    if (!it->subset_of(a)) continue;
    bool covered = false;
    for (PointSet b : blocks) {
      if (it->subset_of(b)) {
        covered = true;
        break;
      }
    }
    if (!covered) blocks.push_back(*it);
  }
  normalize_family(blocks);
  return blocks;
}

Family ConnectivitySpace::irreducibles() const {
  Family result;
  for (PointSet k : structure_) {
    if (k.size() <= 2) {  // singletons and pairs cannot decompose
      result.push_back(k);
      continue;
    }
    Family inside;
    for (PointSet s : structure_)
      if (s.proper_subset_of(k)) inside.push_back(s);
    bool reducible = false;
    for (std::size_t i = 0; i < inside.size() && !reducible; ++i) {
      const PointSet rest = k - inside[i];
      for (std::size_t j = 0; j < inside.size(); ++j) {
        const PointSet b = inside[j];
        if (rest.subset_of(b) && b.intersects(inside[i])) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) result.push_back(k);
  }
  return result;  // structure_ is sorted, so this is too
}

namespace detail {

std::vector<int> irreducible_orders(const Family& irr) {
  std::vector<int> ord(irr.size(), 0);
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (irr[i].size() == 1) continue;
    int best = -1;
    for (std::size_t j = 0; j < i; ++j)  // smaller sets come first
      if (irr[j].proper_subset_of(irr[i])) best = std::max(best, ord[j]);
    assert(best >= 0);  // singletons are always strictly inside
    ord[i] = 1 + best;
  }
  return ord;
}

}  // namespace detail

int ConnectivitySpace::order_of(PointSet k) const {
  const Family irr = irreducibles();
  const auto it = std::lower_bound(irr.begin(), irr.end(), k, SizeLexLess{});
  if (it == irr.end() || *it != k) {
    if (!family_contains(structure_, k))
      throw std::domain_error("set " + k.to_string() + " is not connected");
    throw std::domain_error("set " + k.to_string() + " is not irreducible");
  }
  const std::vector<int> ord = detail::irreducible_orders(irr);
  return ord[static_cast<std::size_t>(it - irr.begin())];
}

int ConnectivitySpace::order() const {
  const Family irr = irreducibles();
  const std::vector<int> ord = detail::irreducible_orders(irr);
  return *std::max_element(ord.begin(), ord.end());
}

bool ConnectivitySpace::totally_disconnected() const {
  return static_cast<int>(structure_.size()) == n_;
}

ConnectivitySpace generate(int n, const Family& generators) {
  check_ground_size(n);
  check_in_range(n, generators);
  for (PointSet g : generators)
    if (g.empty())
      throw std::invalid_argument("empty set cannot be a generator");

  Family family;
  family.reserve(static_cast<std::size_t>(n) + generators.size());
  for (int p = 1; p <= n; ++p) family.push_back(PointSet::single(p));
  for (PointSet g : generators) family.push_back(g);
  normalize_family(family);

  std::unordered_set<std::uint64_t> seen;
  for (PointSet s : family) seen.insert(s.bits());

  // Pairwise-union fixpoint: saturate each new set against everything
  // already present.
  std::vector<PointSet> queue(family.begin(), family.end());
  while (!queue.empty()) {
    const PointSet s = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < family.size(); ++i) {
      const PointSet t = family[i];
      if (!s.intersects(t)) continue;
      const PointSet u = s | t;
      if (seen.insert(u.bits()).second) {
        family.push_back(u);
        queue.push_back(u);
      }
    }
  }
  normalize_family(family);
  return ConnectivitySpace::trusted(n, std::move(family));
}

ConnectivitySpace make_an(int n) {
  check_ground_size(n);
  Family family;
  for (int p = 1; p <= n; ++p) family.push_back(PointSet::single(p));
  for (int k = 2; k <= n; ++k) family.push_back(PointSet::first_n(k));
  normalize_family(family);
  return ConnectivitySpace::trusted(n, std::move(family));
}

ConnectivitySpace relabel(const ConnectivitySpace& space,
                          const std::vector<int>& perm) {
  const int n = space.ground_size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size does not match ground set");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(n));
    hit[static_cast<std::size_t>(v) - 1] = true;
  }
  Family family;
  family.reserve(space.structure().size());
  for (PointSet s : space.structure()) family.push_back(relabel_set(s, perm));
  normalize_family(family);
  return ConnectivitySpace::trusted(n, std::move(family));
}

}  // namespace connord
