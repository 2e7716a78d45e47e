#pragma once

#include "pgain/gain.hpp"
#include "pgain/graph.hpp"

// Dense brute-force references for small graphs. Everything here is O(n^3)
// per step and refuses graphs above kOracleMaxNodes.
namespace pgain {

inline constexpr Index kOracleMaxNodes = 64;

MatrixXd dense_adjacency(const Graph& g);

/// A^k by repeated dense multiplication; entry (i, j) counts walks of length k.
MatrixXd walk_count(const Graph& g, Index k);

/// Number of terms after which the dense series tail is negligible (below
/// ~1e-17 relative) for the given decay.
Index oracle_series_length(Decay kind, double delta, double lambda1);

/// sum_{k=1}^{k_max} phi(k) A^k 1 through scaled dense matrix powers
/// P_k = phi(k) A^k. k_max <= 0 picks oracle_series_length.
VectorXd oracle_gain(const Graph& g, Decay kind, double delta, Index k_max = 0);

/// (I - delta A)^-1 1 by dense LU.
VectorXd oracle_katz(const Graph& g, double delta);

/// Solves (I - alpha P^T) p = (1 - alpha) / n 1 with P = D^-1 A, dangling rows uniform.
VectorXd oracle_pagerank(const Graph& g, double alpha);

/// exp(A) 1 as sum_{k>=0} A^k / k! through scaled dense powers.
VectorXd oracle_communicability(const Graph& g, Index k_max = 0);

/// Largest eigenvalue of the dense adjacency matrix.
double oracle_spectral_radius(const Graph& g);

}  // namespace pgain
