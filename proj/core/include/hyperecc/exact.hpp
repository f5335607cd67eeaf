#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperecc/graph.hpp"

namespace hyperecc {

/// Raised when a quadratic computation would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Upper bound on n * m edge visits for the all-sources BFS oracle.
  std::uint64_t edge_visit_budget = 5'000'000'000ULL;
  bool force = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Dense all-pairs distance table, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(VertexId n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  VertexId n() const { return n_; }
  Distance operator()(VertexId u, VertexId v) const { return d_[index(u, v)]; }
  Distance& at(VertexId u, VertexId v) { return d_[index(u, v)]; }
  std::span<const Distance> row(VertexId u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  std::span<Distance> row(VertexId u) { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }

 private:
  std::size_t index(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }
  VertexId n_ = 0;
  std::vector<Distance> d_;
};

struct EccentricityProfile {
  std::vector<Distance> ecc;
  Distance rad = 0;
  Distance diam = 0;
  /// C(G), ascending.
  std::vector<VertexId> center;
  /// layers[k] = C^k(G) = {v : ecc(v) = rad + k}, ascending.
  std::vector<std::vector<VertexId>> layers;

  static EccentricityProfile from_eccentricities(std::vector<Distance> ecc);
};

struct CenterGeometry {
  Distance center_diam = 0;
  bool center_connected = true;
  std::vector<Distance> dist_to_center;
};

/// Throws BudgetError unless n * m fits the budget or `force` is set.
void check_oracle_budget(const Graph& g, const OracleOptions& options);

/// Exact eccentricities by one BFS per vertex, spread across threads.
EccentricityProfile all_eccentricities(const Graph& g, const OracleOptions& options = {});

/// Exact distance matrix by one BFS per vertex.
DistanceMatrix all_pairs_distances(const Graph& g, const OracleOptions& options = {});

EccentricityProfile eccentricities_from_matrix(const DistanceMatrix& d);

/// F(x): every vertex at distance ecc(x) from x, ascending.
std::vector<VertexId> furthest_set(const Graph& g, VertexId x);

CenterGeometry center_geometry(const Graph& g, const EccentricityProfile& profile);

/// max pairwise graph distance within `vertices` (0 for fewer than two).
Distance set_diameter(const Graph& g, std::span<const VertexId> vertices);

}  // namespace hyperecc
