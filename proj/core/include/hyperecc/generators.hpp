#pragma once

#include <cstdint>
#include <random>

#include "hyperecc/graph.hpp"

namespace hyperecc::gen {

// Deterministic generators for tests, benchmarks and the CLI. Random ones take
// an explicit engine; the draws avoid std:: distributions so a seed yields the
// same graph on every standard library.

Graph path(VertexId n);
Graph cycle(VertexId n);
Graph grid(VertexId rows, VertexId cols);
/// K_{1,leaves} with the hub at id 0.
Graph star(VertexId leaves);
Graph complete(VertexId n);

/// Uniform random labelled tree (Prufer sequence).
Graph random_tree(VertexId n, std::mt19937_64& rng);

/// G(n, p), resampled until connected.
Graph random_connected(VertexId n, double p, std::mt19937_64& rng);

/// Random spanning tree plus `extra_edges` distinct random chords; always
/// connected. Used for large smoke inputs.
Graph random_sparse_connected(VertexId n, std::uint64_t extra_edges, std::mt19937_64& rng);

/// Cliques glued at cut vertices: each new block of size 2..max_block_size
/// attaches to one uniformly chosen existing vertex.
Graph block_graph(VertexId blocks, VertexId max_block_size, std::mt19937_64& rng);

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
double uniform_unit(std::mt19937_64& rng);

}  // namespace hyperecc::gen
