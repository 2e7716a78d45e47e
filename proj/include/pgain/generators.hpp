#pragma once

#include "pgain/graph.hpp"

#include <cstdint>

// Synthetic graphs used as desk-scale stand-ins for real datasets. Every
// generator is deterministic given its arguments and seed.
namespace pgain::generators {

Graph complete(Index n);
/// Cycle C_n, n >= 3.
Graph ring(Index n);
/// Centre 0 joined to `leaves` leaves (n = leaves + 1).
Graph star(Index leaves);
Graph grid(Index rows, Index cols);
/// G(n, p) using geometric skipping over the pair sequence.
Graph erdos_renyi(Index n, double p, std::uint64_t seed);
/// Preferential attachment: a seed clique on m0 + 1 nodes, then every new node
/// attaches to m0 distinct existing nodes chosen with probability proportional
/// to degree. Edge count is m0 (m0 + 1) / 2 + m0 (n - m0 - 1).
Graph barabasi_albert(Index n, Index m0, std::uint64_t seed);

}  // namespace pgain::generators
