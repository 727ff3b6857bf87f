#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "connord/point_set.hpp"

namespace connord {

struct Violation {
  enum class Kind { EmptyMember, MissingSingleton, MissingUnion };
  Kind kind;
  PointSet a;  // empty member (unused), missing singleton, or first of pair
  PointSet b;  // second of pair for MissingUnion
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  /// All violations, one per line.
  std::string describe() const;
};

/// Thrown when an operation requires a valid structure and the input is not.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(report.describe()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the connectivity axioms for a family over {1..n}: no empty member,
/// every singleton present, and for every intersecting pair the union is
/// present. The family is deduplicated first. Throws std::invalid_argument
/// for n out of [1,64] or members outside {1..n}; axiom failures are
/// reported, not thrown.
ValidationReport validate_structure(int n, const Family& sets);

/// A finite integral connectivity space: ground set {1..n} plus the family
/// of connected subsets. Immutable after construction; all operations are
/// pure, so values can be shared freely across threads.
class ConnectivitySpace {
 public:
  /// Validates; throws ValidationError if the family breaks an axiom and
  /// std::invalid_argument for range errors.
  ConnectivitySpace(int n, Family structure);

  /// Fast path for callers that construct valid families (closure,
  /// generators, census). Checked with assertions in debug builds only.
  static ConnectivitySpace trusted(int n, Family normalized_structure);

  int ground_size() const { return n_; }
  /// Size-lex sorted, deduplicated; includes the singletons.
  const Family& structure() const { return structure_; }

  /// Membership in the structure. The empty set is never connected.
  bool is_connected(PointSet a) const;

  /// Maximal connected subsets of `a`; a partition of `a`. Empty input
  /// yields an empty partition.
  Family components(PointSet a) const;

  /// Connected sets that are not the union of two strictly smaller
  /// intersecting connected sets.
  Family irreducibles() const;

  /// Order of an irreducible subset: 0 for singletons, otherwise one more
  /// than the largest order among irreducibles strictly inside. Throws
  /// std::domain_error if `k` is not an irreducible connected set.
  int order_of(PointSet k) const;

  /// Order of the space: maximum order over its irreducibles.
  int order() const;

  bool totally_disconnected() const;

  bool operator==(const ConnectivitySpace&) const = default;

 private:
  ConnectivitySpace() = default;
  int n_ = 0;
  Family structure_;
};

/// Least structure over {1..n} containing all singletons and the generators,
/// closed under unions of intersecting pairs. Extensive, monotone and
/// idempotent in the generators. Empty generator members are rejected.
ConnectivitySpace generate(int n, const Family& generators);

/// The space A_n: singletons plus the prefix sets {1..k}, 2 <= k <= n.
/// Its order is n-1, the maximum possible on n points.
ConnectivitySpace make_an(int n);

/// Relabels the space by a permutation of {1..n}; perm[i-1] is the new
/// label of point i. Throws std::invalid_argument if perm is not a
/// permutation of the right size.
ConnectivitySpace relabel(const ConnectivitySpace& space,
                          const std::vector<int>& perm);

namespace detail {
/// Orders aligned with a size-lex sorted list of irreducibles.
std::vector<int> irreducible_orders(const Family& irreducibles);
}  // namespace detail

}  // namespace connord
