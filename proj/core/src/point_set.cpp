#include "connord/point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace connord {

void normalize_family(Family& family) {
  std::sort(family.begin(), family.end(), SizeLexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool family_contains(const Family& family, PointSet s) {
  return std::binary_search(family.begin(), family.end(), s, SizeLexLess{});
}

PointSet relabel_set(PointSet s, const std::vector<int>& perm) {
  PointSet out;
  for (int p : s.points()) {
    if (p > static_cast<int>(perm.size()))
      throw std::invalid_argument("relabel: point " + std::to_string(p) +
                                  " outside the permutation domain");
    out = out.with(perm[static_cast<std::size_t>(p) - 1]);
  }
  return out;
}

}  // namespace connord
