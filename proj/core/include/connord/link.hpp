#pragma once

#include <vector>

#include "connord/space.hpp"

namespace connord {

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
/// Indices are 1-based to match component labels.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int m);

  /// Throws std::invalid_argument unless square, symmetric, zero-diagonal.
  static LinkingMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int components() const { return m_; }
  int at(int i, int j) const { return v_[idx(i, j)]; }
  /// Sets both (i,j) and (j,i); the diagonal stays zero.
  void set(int i, int j, int value);
  bool zero() const;

  bool operator==(const LinkingMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const;
  int m_;
  std::vector<int> v_;
};

/// A link given by its splittability data: m components (points 1..m) and
/// the sublinks declared nonsplittable. Singletons (knots) are implied.
struct LinkDescription {
  int m = 0;
  Family nonsplittable;
};

/// The connectivity space on the link's components whose connected sets are
/// the nonsplittable sublinks. The declared family plus implied singletons
/// must satisfy the union axiom; a missing union throws ValidationError
/// naming the offending pair. With auto_close the family is closed instead
/// of rejected.
ConnectivitySpace splittability_space(const LinkDescription& link,
                                      bool auto_close = false);

/// Order of the splittability space.
int connectivity_order_of_link(const LinkDescription& link,
                               bool auto_close = false);

/// Closure of { {i,j} : matrix[i][j] != 0 }. Every member is a nonsplittable
/// sublink of any link with this matrix; the true splittability structure
/// may be strictly larger.
ConnectivitySpace linking_lower_bound(const LinkingMatrix& matrix);

}  // namespace connord
