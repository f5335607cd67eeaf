#include "hyperecc/graph_io.hpp"

#include <zlib.h>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hyperecc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off the next whitespace-delimited token; empty when the line is exhausted.
std::string_view next_token(std::string_view& line) {
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  std::size_t j = i;
  while (j < line.size() && !is_space(line[j])) ++j;
  const auto token = line.substr(i, j - i);
  line.remove_prefix(j);
  return token;
}

class EdgeListReader {
 public:
  void consume_line(std::string_view line, std::size_t line_no) {
    std::string_view rest = line;
    const auto first = next_token(rest);
    if (first.empty()) return;
    if (first.front() == '#' || first.front() == '%') return;
    const auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two endpoint tokens");
    const VertexId u = intern(first);
    const VertexId v = intern(second);
    edges_.emplace_back(u, v);
  }

  Graph finish() {
    if (edges_.empty()) throw ParseError(0, "no edges");
    const auto n = static_cast<VertexId>(labels_.size());
    return Graph::from_edges(n, edges_, std::move(labels_));
  }

 private:
  VertexId intern(std::string_view token) {
    auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(token);
    return it->second;
  }

  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

std::string read_gzip(const std::filesystem::path& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw std::runtime_error("cannot open " + path.string());
  std::string data;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof buffer)) > 0) data.append(buffer, static_cast<std::size_t>(got));
  const bool failed = got < 0;
  gzclose(file);
  if (failed) throw std::runtime_error("gzip decompression failed for " + path.string());
  return data;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  EdgeListReader reader;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) reader.consume_line(line, ++line_no);
  return reader.finish();
}

Graph parse_edge_list(std::string_view text) {
  EdgeListReader reader;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    reader.consume_line(text.substr(0, end), ++line_no);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return reader.finish();
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  if (path.extension() == ".gz") return parse_edge_list(std::string_view(read_gzip(path)));
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace hyperecc
