#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperecc/graph.hpp"
#include "hyperecc/harness/generator_spec.hpp"

namespace hyperecc::harness {

struct Violation {
  std::string graph;
  /// Short identifier of the inequality or equivalence that failed.
  std::string check;
  std::string detail;
};

struct VerifyOptions {
  /// Corrupt one estimate of the lambda = tau sweep by lambda + 2 before checking.
  bool inject_fault = false;
  /// Largest graph the quadratic distance checks accept.
  VertexId max_vertices = 200;
  unsigned threads = 0;
};

/// Per-graph counters, mostly for the acceptance report.
struct VerifySummary {
  std::string graph;
  VertexId n = 0;
  Distance tau = 0;
  std::size_t checks = 0;
  bool tree = false;
};

struct VerifyResult {
  std::vector<Violation> violations;
  std::vector<VerifySummary> graphs;
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
  /// Violations whose check id starts with `prefix`.
  std::size_t count(const std::string& prefix) const;
};

/// Checks every bound and equivalence on one connected graph, with
/// tau = 4 * delta4 computed exhaustively.
void verify_graph(const NamedGraph& input, const VerifyOptions& options, VerifyResult& result);

VerifyResult verify_all(const std::vector<NamedGraph>& graphs, const VerifyOptions& options = {});

}  // namespace hyperecc::harness
