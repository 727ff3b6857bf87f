#pragma once

#include <string>
#include <string_view>

#include "connord/space.hpp"

namespace connord {

/// Byte-comparable canonical encoding: two spaces encode equally iff some
/// bijection of ground sets maps one structure onto the other. Color
/// refinement narrows the candidate permutations, then a branch-and-bound
/// over class-preserving relabelings picks the lexicographically least
/// sorted mask family. Exact; intended for n <= 10.
std::string canonical_form(const ConnectivitySpace& space);

std::string hex(std::string_view bytes);

}  // namespace connord
