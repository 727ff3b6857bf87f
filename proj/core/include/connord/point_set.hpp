#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace connord {

/// Largest supported ground set: one machine word per set.
inline constexpr int kMaxGroundSize = 64;

/// A subset of the ground set {1..n}, n <= 64. Point p occupies bit p-1.
class PointSet {
 public:
  constexpr PointSet() = default;

  static constexpr PointSet from_bits(std::uint64_t bits) { return PointSet(bits); }

  static constexpr PointSet single(int p) {
    assert(p >= 1 && p <= kMaxGroundSize);
    return PointSet(std::uint64_t{1} << (p - 1));
  }

  /// The set {1..k}; k = 0 gives the empty set.
  static constexpr PointSet first_n(int k) {
    assert(k >= 0 && k <= kMaxGroundSize);
    return PointSet(k >= kMaxGroundSize ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << k) - 1);
  }

  static PointSet of(std::initializer_list<int> pts) {
    PointSet s;
    for (int p : pts) s = s.with(p);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int p) const {
    return p >= 1 && p <= kMaxGroundSize && (bits_ >> (p - 1)) & 1;
  }

  constexpr PointSet with(int p) const {
    assert(p >= 1 && p <= kMaxGroundSize);
    return PointSet(bits_ | (std::uint64_t{1} << (p - 1)));
  }

  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(PointSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr PointSet operator|(PointSet a, PointSet b) {
    return PointSet(a.bits_ | b.bits_);
  }
  friend constexpr PointSet operator&(PointSet a, PointSet b) {
    return PointSet(a.bits_ & b.bits_);
  }
  /// Set difference a \ b.
  friend constexpr PointSet operator-(PointSet a, PointSet b) {
    return PointSet(a.bits_ & ~b.bits_);
  }

  int min_point() const {
    assert(!empty());
    return std::countr_zero(bits_) + 1;
  }
  int max_point() const {
    assert(!empty());
    return kMaxGroundSize - std::countl_zero(bits_);
  }

  /// Sorted 1-based labels.
  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Space-separated sorted labels, e.g. "1 2 3".
  std::string labels() const {
    std::string out;
    for (int p : points()) {
      if (!out.empty()) out += ' ';
      out += std::to_string(p);
    }
    return out;
  }

  /// Braced comma-separated form for messages, e.g. "{1,2,3}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int p : points()) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(p);
    }
    out += '}';
    return out;
  }

  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  explicit constexpr PointSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Orders sets by cardinality first, then by mask value. Families are kept
/// sorted in this order everywhere so iteration is deterministic.
struct SizeLexLess {
  constexpr bool operator()(PointSet a, PointSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

using Family = std::vector<PointSet>;

/// Sorts size-lexicographically and removes duplicates.
void normalize_family(Family& family);

/// Membership test; `family` must be normalized.
bool family_contains(const Family& family, PointSet s);

/// Image of `s` under a permutation of {1..n}; perm[i-1] is the new label
/// of point i.
PointSet relabel_set(PointSet s, const std::vector<int>& perm);

}  // namespace connord
