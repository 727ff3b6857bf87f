#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "connord/link.hpp"
#include "connord/space.hpp"

namespace connord {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw contents of a space file, before any axiom checking.
struct SpaceFileData {
  int n = 0;
  Family sets;
};

/// Space file: header `points N`, then `set i1 i2 ... ik` lines; `#` starts
/// a comment; singletons are implied. Labels must lie in 1..N and N in
/// 1..64; anything else is a ParseError. Axiom violations are left to
/// validate_structure.
SpaceFileData parse_space_file(std::istream& in);
SpaceFileData parse_space_file(const std::string& text);

/// Text form that re-parses to the same family; singleton members are
/// implied and not printed.
std::string space_file_text(int n, const Family& sets);
std::string space_file_text(const ConnectivitySpace& space);

/// Matrix file: N on the first line, then N rows of N integers. Must be
/// symmetric with zero diagonal.
LinkingMatrix parse_matrix_file(std::istream& in);
LinkingMatrix parse_matrix_file(const std::string& text);

}  // namespace connord
