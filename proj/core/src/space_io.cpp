#include "connord/space_io.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace connord {

namespace {

// Strips `#` comments and splits into whitespace tokens.
std::vector<std::string> tokenize(const std::string& line) {
  const std::size_t hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line
                                                  : line.substr(0, hash));
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

SpaceFileData parse_space_file(std::istream& in) {
  SpaceFileData data;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens[0] != "points" || tokens.size() != 2)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header 'points N'");
      data.n = parse_int(tokens[1], "point count");
      if (data.n < 1 || data.n > kMaxGroundSize)
        throw ParseError("point count must be in 1.." +
                         std::to_string(kMaxGroundSize) + ", got " +
                         std::to_string(data.n));
      have_header = true;
      continue;
    }
    if (tokens[0] != "set")
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'set i1 i2 ...', got '" + tokens[0] + "'");
    PointSet s;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const int p = parse_int(tokens[i], "point label");
      if (p < 1 || p > data.n)
        throw ParseError("line " + std::to_string(lineno) + ": label " +
                         std::to_string(p) + " outside 1.." +
                         std::to_string(data.n));
      s = s.with(p);
    }
    data.sets.push_back(s);
  }
  if (!have_header) throw ParseError("missing 'points N' header");
  normalize_family(data.sets);
  return data;
}

SpaceFileData parse_space_file(const std::string& text) {
  std::istringstream in(text);
  return parse_space_file(in);
}

std::string space_file_text(int n, const Family& sets) {
  Family family = sets;
  normalize_family(family);
  std::string out = "points " + std::to_string(n) + "\n";
  for (PointSet s : family) {
    if (s.size() <= 1) continue;  // singletons implied
    out += "set " + s.labels() + "\n";
  }
  return out;
}

std::string space_file_text(const ConnectivitySpace& space) {
  return space_file_text(space.ground_size(), space.structure());
}

LinkingMatrix parse_matrix_file(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::vector<std::string> t = tokenize(line);
    tokens.insert(tokens.end(), t.begin(), t.end());
  }
  if (tokens.empty()) throw ParseError("empty matrix file");
  const int m = parse_int(tokens[0], "matrix size");
  if (m < 1 || m > kMaxGroundSize)
    throw ParseError("matrix size must be in 1.." +
                     std::to_string(kMaxGroundSize) + ", got " +
                     std::to_string(m));
  if (tokens.size() != 1 + static_cast<std::size_t>(m) * m)
    throw ParseError("expected " + std::to_string(m * m) +
                     " matrix entries, got " +
                     std::to_string(tokens.size() - 1));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
  std::size_t next = 1;
  for (auto& row : rows)
    for (int j = 0; j < m; ++j)
      row.push_back(parse_int(tokens[next++], "matrix entry"));
  try {
    return LinkingMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LinkingMatrix parse_matrix_file(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_file(in);
}

}  // namespace connord
