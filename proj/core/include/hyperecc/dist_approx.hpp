#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperecc/exact.hpp"
#include "hyperecc/graph.hpp"

namespace hyperecc {

/// Closed balls of radius lambda around every vertex, i.e. the closed
/// neighborhoods of G^lambda. Each ball is stored as an ascending id list.
class PowerReach {
 public:
  PowerReach() = default;
  PowerReach(Distance lambda, std::vector<std::uint64_t> offsets, std::vector<VertexId> members)
      : lambda_(lambda), offsets_(std::move(offsets)), members_(std::move(members)) {}

  Distance lambda() const { return lambda_; }
  VertexId n() const { return static_cast<VertexId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::span<const VertexId> reach(VertexId v) const {
    return {members_.data() + offsets_[v], members_.data() + offsets_[v + 1]};
  }
  /// d(u, v) <= lambda.
  bool within(VertexId u, VertexId v) const;
  std::uint64_t total_entries() const { return members_.size(); }

 private:
  Distance lambda_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> members_;
};

struct PowerReachOptions {
  /// Refuse when the summed ball sizes exceed this many entries.
  std::uint64_t max_entries = 400'000'000ULL;
};

/// One depth-lambda truncated BFS per vertex. Throws BudgetError when the
/// balls outgrow the entry budget.
PowerReach power_reachability(const Graph& g, Distance lambda, const PowerReachOptions& options = {});

class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pluggable distance estimate with the declared guarantee
/// d(x,y) <= query(x,y) <= alpha * d(x,y) + beta.
class DistanceEstimator {
 public:
  virtual ~DistanceEstimator() = default;
  virtual Distance query(VertexId x, VertexId y) const = 0;
  virtual Distance alpha() const = 0;
  virtual Distance beta() const = 0;
};

/// Exact distances from a precomputed matrix, (alpha, beta) = (1, 0).
class ExactEstimator final : public DistanceEstimator {
 public:
  explicit ExactEstimator(const DistanceMatrix& d) : d_(&d) {}
  Distance query(VertexId x, VertexId y) const override { return (*d_)(x, y); }
  Distance alpha() const override { return 1; }
  Distance beta() const override { return 0; }

 private:
  const DistanceMatrix* d_;
};

/// Worst case of a (2, 1) estimator: 2d + 1 off the diagonal.
class DoublingEstimator final : public DistanceEstimator {
 public:
  explicit DoublingEstimator(const DistanceMatrix& d) : d_(&d) {}
  Distance query(VertexId x, VertexId y) const override {
    return x == y ? 0 : 2 * (*d_)(x, y) + 1;
  }
  Distance alpha() const override { return 2; }
  Distance beta() const override { return 1; }

 private:
  const DistanceMatrix* d_;
};

enum class EstimateMode { kExactPower, kEstimator };

/// Symmetric matrix of one-sided distance estimates, stored as a packed
/// lower triangle of 16-bit entries.
class DistanceEstimate {
 public:
  DistanceEstimate() = default;
  DistanceEstimate(VertexId n, VertexId root, Distance parameter, EstimateMode mode);

  VertexId n() const { return n_; }
  VertexId root() const { return root_; }
  /// lambda in exact-power mode, rho in estimator mode.
  Distance parameter() const { return parameter_; }
  EstimateMode mode() const { return mode_; }

  Distance operator()(VertexId x, VertexId y) const {
    return x == y ? 0 : values_[index(x, y)];
  }
  void set(VertexId x, VertexId y, Distance value);
  /// Replaces an entry without counting it as a fresh assignment.
  void overwrite(VertexId x, VertexId y, Distance value);
  /// Number of off-diagonal entries written at least once, and how many were
  /// written more than once.
  std::uint64_t assigned_pairs() const { return assigned_; }
  std::uint64_t reassigned_pairs() const { return reassigned_; }
  bool complete() const {
    return assigned_ == static_cast<std::uint64_t>(n_) * (n_ - (n_ > 0 ? 1 : 0)) / 2;
  }

  std::span<const std::uint16_t> packed() const { return values_; }

  void write_binary(std::ostream& out) const;
  static DistanceEstimate read_binary(std::istream& in);

 private:
  static std::size_t index(VertexId x, VertexId y) {
    if (x < y) std::swap(x, y);
    return static_cast<std::size_t>(x) * (x - 1) / 2 + y;
  }

  VertexId n_ = 0;
  VertexId root_ = kNoVertex;
  Distance parameter_ = 0;
  EstimateMode mode_ = EstimateMode::kExactPower;
  std::vector<std::uint16_t> values_;
  std::vector<bool> written_;
  std::uint64_t assigned_ = 0;
  std::uint64_t reassigned_ = 0;
};

struct SweepOptions {
  /// Test membership by stamping each ancestor's ball into a bitmap instead
  /// of binary searching the sorted ball.
  bool bitmap_membership = false;
  /// Check the subtree-family invariant at every level (quadratic, tests only).
  bool validate_family = false;
  /// Spot-check the estimator contract while sweeping.
  bool check_contract = true;
};

/// Exact-power sweep: d^(x,y) = h(x) + h(y) - 2 sl(x,y;lambda) + lambda and
/// d^(x,root) = h(x). Guarantees d <= d^ <= d + lambda + 1 once lambda is at
/// least the triangle thinness.
DistanceEstimate approximate_all_distances(const Graph& g, Distance lambda, VertexId root,
                                           const SweepOptions& options = {});
DistanceEstimate approximate_all_distances(const Graph& g, const PowerReach& reach, VertexId root,
                                           const SweepOptions& options = {});
/// Same sweep answering "d(u,v) <= lambda" from an exact matrix.
DistanceEstimate approximate_all_distances(const Graph& g, const DistanceMatrix& d, Distance lambda,
                                           VertexId root, const SweepOptions& options = {});

/// Estimator sweep with threshold and additive term 2 rho + 1.
DistanceEstimate approximate_all_distances_estimated(const Graph& g, Distance rho,
                                                     const DistanceEstimator& estimator, VertexId root,
                                                     const SweepOptions& options = {});

/// Largest level k <= min(h(x), h(y)) whose level-k ancestors are within the
/// threshold. Level 0 always qualifies.
Distance separation_level(const BfsLayering& layering, const PowerReach& reach, VertexId x, VertexId y);
Distance separation_level(const BfsLayering& layering, const DistanceMatrix& d, VertexId x, VertexId y,
                          Distance threshold);
Distance separation_level(const BfsLayering& layering, const DistanceEstimator& estimator, VertexId x,
                          VertexId y, Distance threshold);

/// Closed form of a single estimate: the reference the sweep must reproduce.
Distance closed_form_estimate(const BfsLayering& layering, Distance level, Distance additive, VertexId x,
                              VertexId y);

struct DistanceBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// (h(x)+h(y)-2k-1, h(x)+h(y)-2k+d(x_k,y_k)) with k = sl(x,y;lambda).
DistanceBounds distance_sandwich(const BfsLayering& layering, const DistanceMatrix& d, VertexId x,
                                 VertexId y, Distance lambda);

struct ErrorStats {
  std::int64_t max_error = 0;
  std::int64_t min_error = 0;
  /// Mean over all n^2 ordered pairs, diagonal included.
  double avg_error = 0.0;
  /// Worst pair (x < y) attaining max_error.
  std::pair<VertexId, VertexId> worst{kNoVertex, kNoVertex};
};

ErrorStats error_stats(const DistanceEstimate& estimate, const DistanceMatrix& d);

/// Estimates for a few source rows only, computed from the closed form with
/// one BFS per ancestor of each source; no G^lambda needed.
struct SampledRows {
  std::vector<VertexId> sources;
  /// rows[i][y] = d^(sources[i], y); exact[i][y] = d(sources[i], y).
  std::vector<std::vector<Distance>> rows;
  std::vector<std::vector<Distance>> exact;
};

SampledRows estimate_rows(const Graph& g, const BfsLayering& layering, Distance lambda,
                          std::span<const VertexId> sources);

/// The `count` deepest vertices of the layering (ties to lower id).
std::vector<VertexId> deepest_vertices(const BfsLayering& layering, std::size_t count);

ErrorStats error_stats(const SampledRows& rows);

struct DeltaRow {
  Distance delta = 0;
  std::int64_t max_error = 0;
  double avg_error = 0.0;
  bool admissible = false;
};

struct AdmissibleDelta {
  Distance delta = 0;
  std::int64_t max_error = 0;
  double avg_error = 0.0;
  /// One row per delta tried, ending with the admissible one.
  std::vector<DeltaRow> rows;
};

/// Smallest delta in [0, diam] with max error <= delta + 1, scanning upward.
AdmissibleDelta smallest_admissible_delta(const Graph& g, VertexId root, const DistanceMatrix& d);

/// Same search over sampled source rows.
AdmissibleDelta smallest_admissible_delta_sampled(const Graph& g, VertexId root,
                                                  std::span<const VertexId> sources);

}  // namespace hyperecc
