#pragma once

#include "pgain/centrality.hpp"
#include "pgain/graph.hpp"

// Comparison centralities, all computed with the same sparse kernel as the
// potential gains so their cost profile is O(k m).
namespace pgain {

inline constexpr double kDefaultDamping = 0.85;
inline constexpr Index kBaselineMaxIterations = 100000;

CentralityVector degree_centrality(const Graph& g);

/// (I - delta A)^-1 1 via x <- 1 + delta A x from x = 1, stopping when
/// ||x_new - x|| / ||x_new|| < tolerance. lambda1 <= 0 triggers a power-iteration
/// estimate to validate delta < 1 / lambda1.
CentralityVector katz_centrality(const Graph& g, double delta, double tolerance, Index max_iter = kBaselineMaxIterations,
                                 double lambda1 = 0.0);

/// p <- (1 - alpha) / n + alpha (D^-1 A)^T p with uniform teleport for
/// dangling nodes; stops when the L1 change drops below tolerance. The
/// result is L1-normalised.
CentralityVector pagerank(const Graph& g, double alpha = kDefaultDamping, double tolerance = 1e-12,
                          Index max_iter = kBaselineMaxIterations);

/// exp(A) 1 via s_0 = 1, s_j = A s_{j-1} / j until ||s_j|| / ||sum|| < tolerance.
CentralityVector communicability_vector(const Graph& g, double tolerance = 1e-12,
                                        Index max_iter = kBaselineMaxIterations);

}  // namespace pgain
