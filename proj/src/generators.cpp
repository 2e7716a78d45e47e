#include "pgain/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pgain::generators {

namespace {

using EdgeList = std::vector<std::pair<Index, Index>>;

// Uniform in [0, 1) from the top 53 bits; the std distributions are not
// reproducible across standard library implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Index uniform_index(std::mt19937_64& rng, Index bound) {
  return static_cast<Index>(uniform01(rng) * static_cast<double>(bound));
}

}  // namespace

Graph complete(Index n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  EdgeList edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph ring(Index n) {
  if (n < 3) throw ParameterError("ring needs n >= 3");
  EdgeList edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star(Index leaves) {
  if (leaves < 1) throw ParameterError("star needs at least one leaf");
  EdgeList edges;
  for (Index i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph grid(Index rows, Index cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw ParameterError("grid needs at least two cells");
  EdgeList edges;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const Index v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph erdos_renyi(Index n, double p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("G(n, p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("G(n, p) needs p in [0, 1]");
  if (p == 1.0) return complete(n);
  EdgeList edges;
  if (p > 0.0) {
    std::mt19937_64 rng(seed);
    const double log_q = std::log1p(-p);
    Index v = 1, w = -1;
    while (v < n) {
      const double r = uniform01(rng);
      w += 1 + static_cast<Index>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph barabasi_albert(Index n, Index m0, std::uint64_t seed) {
  if (m0 < 1) throw ParameterError("preferential attachment needs m0 >= 1");
  if (n < m0 + 1) throw ParameterError("preferential attachment needs n >= m0 + 1");
  std::mt19937_64 rng(seed);
  EdgeList edges;
  // Every edge endpoint, so a uniform pick is a degree-proportional pick.
  std::vector<Index> endpoints;
  endpoints.reserve(static_cast<std::size_t>(2 * (m0 * (m0 + 1) / 2 + m0 * (n - m0 - 1))));
  for (Index i = 0; i <= m0; ++i) {
    for (Index j = i + 1; j <= m0; ++j) {
      edges.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<Index> targets;
  for (Index v = m0 + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<Index>(targets.size()) < m0) {
      const Index t = endpoints[static_cast<std::size_t>(uniform_index(rng, static_cast<Index>(endpoints.size())))];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (const Index t : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace pgain::generators
