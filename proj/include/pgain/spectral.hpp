#pragma once

#include "pgain/centrality.hpp"
#include "pgain/graph.hpp"

namespace pgain {

struct SpectralEstimate {
  double lambda1 = 0.0;
  /// Unit L2 norm, entrywise non-negative.
  VectorXd eigenvector;
  Index iterations = 0;
  bool converged = false;
  /// ||A v - lambda1 v||_2
  double residual = 0.0;
};

inline constexpr double kSpectralTolerance = 1e-10;
inline constexpr Index kSpectralMaxIterations = 10000;

/// Power iteration on A + I starting from the uniform unit vector.
///
/// The +1 shift keeps the dominant eigenvalue strictly largest in modulus on
/// bipartite graphs, where A itself has both lambda1 and -lambda1. Stops once
/// the Rayleigh quotient of A changes by less than tol (relative) and the
/// residual is at most 10 * tol * lambda1. Hitting max_iter returns the last
/// iterate with converged = false.
SpectralEstimate power_iteration(const Graph& g, double tol = kSpectralTolerance,
                                 Index max_iter = kSpectralMaxIterations);

/// Principal eigenvector as the EC baseline (unit L2 norm).
CentralityVector eigenvector_centrality(const Graph& g, double tol = kSpectralTolerance,
                                        Index max_iter = kSpectralMaxIterations);

CentralityVector to_centrality(const SpectralEstimate& estimate);

}  // namespace pgain
