#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "hyperecc/exact.hpp"

namespace hyperecc {

/// Exact half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(doubled_) / 2.0; }
  /// Smallest integer >= this value.
  constexpr std::int64_t ceil() const {
    return doubled_ >= 0 ? (doubled_ + 1) / 2 : -((-doubled_) / 2);
  }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(doubled_ * k); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// One fractional digit: "0.0", "1.5", "2.0".
  std::string to_string() const;

 private:
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 0;
};

/// (y|z)_w = (d(y,w) + d(z,w) - d(y,z)) / 2.
HalfInt gromov_product(const DistanceMatrix& d, VertexId y, VertexId z, VertexId w);

/// Half the gap between the two largest of the three pairing sums of a quadruple.
HalfInt quadruple_delta(const DistanceMatrix& d, VertexId a, VertexId b, VertexId c, VertexId e);

struct HyperbolicityReport {
  HalfInt delta4;
  /// Lexicographically smallest ascending quadruple attaining delta4.
  std::array<VertexId, 4> witness{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  /// 4 * delta4; always an integer.
  HalfInt thinness_bound;
  /// Sampled lower bound rather than the exact maximum.
  bool approximate = false;
  std::uint64_t quadruples = 0;

  /// Integer value of thinness_bound, the tau used by every bound check.
  Distance tau() const { return static_cast<Distance>(thinness_bound.doubled() / 2); }
};

struct HyperbolicityOptions {
  /// Exhaustive enumeration refuses graphs with more vertices unless forced.
  VertexId max_exact_vertices = 120;
  bool force = false;
  unsigned threads = 0;
};

/// Exact four-point hyperbolicity over all quadruples of the matrix's vertices.
HyperbolicityReport four_point_delta(const DistanceMatrix& d, const HyperbolicityOptions& options = {});

/// Same maximum restricted to quadruples drawn from `subset`.
HyperbolicityReport four_point_delta(const DistanceMatrix& d, std::span<const VertexId> subset);

/// Lower bound from random quadruples over a pool of `pool_size` vertices whose
/// BFS rows are computed on demand; usable on graphs far beyond the exact budget.
HyperbolicityReport sampled_four_point_delta(const Graph& g, VertexId pool_size,
                                             std::uint64_t samples, std::uint64_t seed);

}  // namespace hyperecc
