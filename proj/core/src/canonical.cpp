#include "connord/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace connord {

namespace {

// Iterative color refinement. A point's key combines its current color with
// the multiset, over members containing it, of (member size, sorted member
// color profile). Stable after at most n rounds.
std::vector<int> refine_colors(int n, const Family& members) {
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
      auto& key = keys[static_cast<std::size_t>(p) - 1];
      key.push_back(color[static_cast<std::size_t>(p) - 1]);
      std::vector<std::vector<int>> parts;
      for (const PointSet& m : members) {
        if (!m.contains(p)) continue;
        std::vector<int> part{m.size()};
        for (int q : m.points())
          part.push_back(color[static_cast<std::size_t>(q) - 1]);
        std::sort(part.begin() + 1, part.end());
        parts.push_back(std::move(part));
      }
      std::sort(parts.begin(), parts.end());
      for (auto& part : parts) {
        key.push_back(-1);  // separator
        key.insert(key.end(), part.begin(), part.end());
      }
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& key : keys) ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> fresh(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      fresh[static_cast<std::size_t>(p)] =
          ids[keys[static_cast<std::size_t>(p)]];
    const bool stable = fresh == color && next == classes;
    color = std::move(fresh);
    classes = next;
    if (stable || classes == n) break;
  }
  return color;
}

struct CanonSearch {
  int n;
  const Family& members;
  std::vector<std::vector<int>> cells;  // candidate points per position block
  std::vector<int> cell_of_pos;
  std::vector<int> new_of_old;  // 1-based, 0 = unassigned
  std::vector<bool> used_old;
  std::uint64_t assigned_old = 0;
  std::vector<std::uint64_t> best;
  bool have_best = false;

  explicit CanonSearch(int n_, const Family& members_)
      : n(n_), members(members_) {
    const std::vector<int> color = refine_colors(n, members);
    std::map<int, std::vector<int>> by_color;
    for (int p = 1; p <= n; ++p)
      by_color[color[static_cast<std::size_t>(p) - 1]].push_back(p);
    // Small cells first keeps the branch factor low; ordering by (size,
    // color id) depends only on refinement data, never on labels.
    std::vector<std::pair<std::size_t, int>> order;
    for (const auto& [c, pts] : by_color) order.emplace_back(pts.size(), c);
    std::sort(order.begin(), order.end());
    for (const auto& [sz, c] : order) {
      for (std::size_t i = 0; i < sz; ++i)
        cell_of_pos.push_back(static_cast<int>(cells.size()));
      cells.push_back(by_color[c]);
    }
    new_of_old.assign(static_cast<std::size_t>(n) + 1, 0);
    used_old.assign(static_cast<std::size_t>(n) + 1, false);
  }

  std::uint64_t relabeled(PointSet s) const {
    std::uint64_t out = 0;
    for (int p : s.points())
      out |= std::uint64_t{1}
             << (new_of_old[static_cast<std::size_t>(p)] - 1);
    return out;
  }

  // Masks of members fully inside the assigned points. They form the
  // numeric prefix of any completion: every undecided member keeps a bit
  // above the assigned positions.
  std::vector<std::uint64_t> prefix() const {
    std::vector<std::uint64_t> out;
    for (const PointSet& m : members)
      if ((m.bits() & ~assigned_old) == 0) out.push_back(relabeled(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  void search(int pos) {
    if (pos > n) {
      std::vector<std::uint64_t> full = prefix();
      if (!have_best || full < best) {
        best = std::move(full);
        have_best = true;
      }
      return;
    }
    for (int old :
         cells[static_cast<std::size_t>(cell_of_pos[static_cast<std::size_t>(pos) - 1])]) {
      if (used_old[static_cast<std::size_t>(old)]) continue;
      used_old[static_cast<std::size_t>(old)] = true;
      new_of_old[static_cast<std::size_t>(old)] = pos;
      assigned_old |= std::uint64_t{1} << (old - 1);

      bool viable = true;
      if (have_best) {
        const std::vector<std::uint64_t> d = prefix();
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (i >= best.size() || d[i] > best[i]) {
            viable = false;
            break;
          }
          if (d[i] < best[i]) break;
        }
      }
      if (viable) search(pos + 1);

      assigned_old &= ~(std::uint64_t{1} << (old - 1));
      new_of_old[static_cast<std::size_t>(old)] = 0;
      used_old[static_cast<std::size_t>(old)] = false;
    }
  }
};

}  // namespace

std::string canonical_form(const ConnectivitySpace& space) {
  const int n = space.ground_size();
  CanonSearch search(n, space.structure());
  search.search(1);

  std::string bytes;
  bytes.reserve(1 + 8 * search.best.size());
  bytes.push_back(static_cast<char>(n));
  for (std::uint64_t mask : search.best)
    for (int shift = 56; shift >= 0; shift -= 8)
      bytes.push_back(static_cast<char>((mask >> shift) & 0xff));
  return bytes;
}

std::string hex(std::string_view bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace connord
