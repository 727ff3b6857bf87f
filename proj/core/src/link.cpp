#include "connord/link.hpp"

#include <stdexcept>
#include <string>

namespace connord {

LinkingMatrix::LinkingMatrix(int m) : m_(m) {
  if (m < 1 || m > kMaxGroundSize)
    throw std::invalid_argument("component count must be in 1.." +
                                std::to_string(kMaxGroundSize));
  v_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
}

std::size_t LinkingMatrix::idx(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_)
    throw std::out_of_range("component index outside 1.." +
                            std::to_string(m_));
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
         static_cast<std::size_t>(j - 1);
}

void LinkingMatrix::set(int i, int j, int value) {
  if (i == j && value != 0)
    throw std::invalid_argument("diagonal linking numbers must be zero");
  v_[idx(i, j)] = value;
  v_[idx(j, i)] = value;
}

bool LinkingMatrix::zero() const {
  for (int x : v_)
    if (x != 0) return false;
  return true;
}

LinkingMatrix LinkingMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  LinkingMatrix out(m);
  for (int i = 1; i <= m; ++i)
    if (static_cast<int>(rows[static_cast<std::size_t>(i) - 1].size()) != m)
      throw std::invalid_argument("linking matrix must be square");
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int v = rows[static_cast<std::size_t>(i) - 1]
                        [static_cast<std::size_t>(j) - 1];
      if (i == j && v != 0)
        throw std::invalid_argument("linking matrix diagonal must be zero");
      if (rows[static_cast<std::size_t>(j) - 1]
              [static_cast<std::size_t>(i) - 1] != v)
        throw std::invalid_argument("linking matrix must be symmetric");
      if (i < j) out.set(i, j, v);
    }
  }
  return out;
}

ConnectivitySpace splittability_space(const LinkDescription& link,
                                      bool auto_close) {
  if (auto_close) return generate(link.m, link.nonsplittable);
  Family family = link.nonsplittable;
  for (int p = 1; p <= link.m; ++p) family.push_back(PointSet::single(p));
  return ConnectivitySpace(link.m, std::move(family));
}

int connectivity_order_of_link(const LinkDescription& link, bool auto_close) {
  return splittability_space(link, auto_close).order();
}

ConnectivitySpace linking_lower_bound(const LinkingMatrix& matrix) {
  Family generators;
  const int m = matrix.components();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (matrix.at(i, j) != 0)
        generators.push_back(PointSet::single(i) | PointSet::single(j));
  return generate(m, generators);
}

}  // namespace connord
