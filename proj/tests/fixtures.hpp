#pragma once

#include "pgain/generators.hpp"
#include "pgain/graph.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace pgain::fixtures {

inline Graph parse(const std::string& text, ParseReport* report = nullptr) {
  std::istringstream in(text);
  return parse_edge_list(in, {}, report);
}

inline Graph k3() { return generators::complete(3); }
inline Graph p2() { return generators::complete(2); }
inline Graph star4() { return generators::star(4); }
inline Graph c4() { return generators::ring(4); }

/// Star with five leaves whose centre also carries a tail ending in a triangle:
///   centre 0 - leaves 1..5, 0 - 6, triangle 6 - 7 - 8.
/// Degrees: 6, 1 x5, 3, 2, 2. Equal-degree nodes are automorphic, so every
/// centrality ranks ties identically.
inline Graph star_plus_tail() {
  return parse("0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n6 7\n6 8\n7 8\n");
}

/// Seeded random graphs with 5 <= n <= 50, alternating G(n, p) and preferential
/// attachment. Only graphs with at least one edge and no isolated node are kept.
inline std::vector<Graph> random_graphs(int count, std::uint64_t seed, Index max_n = 50) {
  std::vector<Graph> out;
  std::uint64_t s = seed;
  while (static_cast<int>(out.size()) < count) {
    ++s;
    const Index n = 5 + static_cast<Index>(s * 7919 % static_cast<std::uint64_t>(max_n - 4));
    Graph g = (s % 2 == 0) ? generators::erdos_renyi(n, 0.25, s) : generators::barabasi_albert(n, 1 + s % 3, s);
    bool isolated = false;
    for (Index i = 0; i < g.node_count(); ++i) isolated = isolated || g.degree(i) == 0;
    if (g.edge_count() > 0 && !isolated) out.push_back(std::move(g));
  }
  return out;
}

inline double relative_error(const VectorXd& got, const VectorXd& want) {
  return (got - want).norm() / want.norm();
}

}  // namespace pgain::fixtures
