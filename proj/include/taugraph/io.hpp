#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool blank_or_comment(std::string_view s) {
  auto pos = s.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || s[pos] == '#';
}

inline bool parse_unsigned(std::istringstream& in, unsigned long long& out) {
  std::string token;
  if (!(in >> token)) return false;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(token);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace detail

/// Reads the edge-list text format: the first non-comment line holds n,
/// each following non-comment line holds "u v". Lines starting with '#'
/// and blank lines are skipped.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string extra;
    if (!order) {
      unsigned long long n = 0;
      if (!detail::parse_unsigned(fields, n) || (fields >> extra)) {
        throw ParseError(lineno, "expected the vertex count");
      }
      if (n > kMaxOrder) {
        throw ParseError(lineno, "vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
      }
      order = static_cast<std::size_t>(n);
      continue;
    }
    unsigned long long a = 0;
    unsigned long long b = 0;
    if (!detail::parse_unsigned(fields, a) || !detail::parse_unsigned(fields, b) || (fields >> extra)) {
      throw ParseError(lineno, "expected an edge \"u v\"");
    }
    if (a >= *order || b >= *order) throw ParseError(lineno, "vertex out of range 0.." + std::to_string(*order - 1));
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge " + to_string(e));
    edges.push_back(e);
  }
  if (!order) throw ParseError(lineno, "empty input: missing vertex count");
  return Graph::from_edges(*order, edges);
}

inline Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

/// Writes text to path through a sibling temporary file and a rename, so a
/// failure never leaves a partial file behind.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace taugraph
