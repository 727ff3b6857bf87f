#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "connord/space.hpp"

namespace connord {

/// Default (and spec) cap on census size; the candidate space grows doubly
/// exponentially past this.
inline constexpr int kCensusCap = 6;

struct CensusReport {
  int n = 0;
  bool labeled = false;
  std::uint64_t labeled_count = 0;
  /// Sorted canonical encodings; empty in labeled mode.
  std::vector<std::string> iso_classes;
  /// order -> class count (or labeled-structure count in labeled mode).
  std::map<int, std::uint64_t> order_histogram;
  std::uint64_t tree_like_count = 0;
};

struct ClassStats {
  int order = 0;
  bool tree_like = false;
  Family representative;  // full structure of the first structure seen
};

/// Every integral structure on {1..n} up to isomorphism, keyed by canonical
/// form. labeled_count (if non-null) receives the labeled total.
std::map<std::string, ClassStats> census_classes(int n,
                                                 std::uint64_t* labeled_count,
                                                 int cap = kCensusCap);

/// Depth-first orderly enumeration of all structures over {1..n}: subsets
/// are decided in size-lex order and unions of intersecting chosen pairs
/// are forced, so each closed family is produced exactly once. Deduplicates
/// by canonical form unless `labeled`. Throws std::invalid_argument above
/// the cap, naming it.
CensusReport enumerate_structures(int n, bool labeled, int cap = kCensusCap);

struct ExtremalCheck {
  bool unique_extremal = false;
  /// Canonical forms of the order-(n-1) classes.
  std::vector<std::string> witnesses;
};

/// True iff exactly one isomorphism class of order n-1 exists and it is
/// A_n's class.
ExtremalCheck extremal_check(int n, int cap = kCensusCap);

}  // namespace connord
