#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperecc/graph.hpp"

namespace hyperecc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a SNAP/KONECT style edge list. Lines starting with '#' or '%' are
/// comments; every other non-blank line needs at least two tokens, the first
/// two being the endpoints (extra columns such as weights are ignored).
/// Tokens are treated as opaque labels and mapped to contiguous ids in
/// first-appearance order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Reads an edge list from disk; a ".gz" suffix selects gzip decompression.
Graph read_edge_list_file(const std::filesystem::path& path);

/// Writes the canonical edge set, one "u v" line per edge, using labels when
/// the graph has them.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hyperecc
