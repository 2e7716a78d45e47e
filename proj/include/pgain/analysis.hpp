#pragma once

#include "pgain/centrality.hpp"
#include "pgain/gain.hpp"
#include "pgain/graph.hpp"
#include "pgain/spectral.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pgain {

/// Fractional ranks (1-based); tied values share the mean of their positions.
VectorXd average_ranks(const VectorXd& values);

/// Spearman's rho as the Pearson correlation of average ranks.
/// Throws DimensionError on length mismatch or fewer than two entries, and
/// UndefinedCorrelation when either input is constant.
double spearman_rho(const VectorXd& a, const VectorXd& b);

struct CorrelationReport {
  std::vector<std::string> metric_names;
  /// Symmetric; NaN where the correlation is undefined.
  MatrixXd rho;
  /// (i, j, reason) for every undefined off-diagonal entry with i < j.
  std::vector<std::tuple<Index, Index, std::string>> missing;

  bool defined(Index i, Index j) const { return !std::isnan(rho(i, j)); }
};

/// Pairwise rho over the vectors, ordered by metric name (stable for equal names).
CorrelationReport correlation_matrix(std::span<const CentralityVector> vectors);

struct SweepPoint {
  double delta_star = 0.0;
  std::optional<double> rho_deg, rho_ec, rho_pr, rho_katz, rho_epg;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double lambda1 = 0.0;
  double alpha = 0.85;
};

/// {0.1, 0.2, ..., 0.9}
std::vector<double> default_delta_star_grid();

/// For every delta* computes GPG and Katz at delta = delta* / lambda1 and
/// correlates GPG against DEG, EC, PR, Katz and EPG. The grid must be strictly
/// ascending inside (0, 1). Undefined correlations are left empty.
SweepResult delta_sweep(const Graph& g, std::span<const double> grid, double alpha,
                        std::optional<SpectralEstimate> spectral = std::nullopt, double tolerance = 1e-12);

/// epsilon(k) traces for every requested decay; geometric traces are produced
/// once per delta*, the exponential trace once. max_walk_length = 0 runs each
/// series to `tolerance`.
std::vector<ConvergenceTrace> convergence_report(const Graph& g, std::span<const Decay> kinds,
                                                 std::span<const double> delta_stars, double lambda1,
                                                 Index max_walk_length, double tolerance = kDefaultGainTolerance);

/// Least-squares slope of log(epsilon) against k over first <= k <= last.
double log_error_slope(const ConvergenceTrace& trace, Index first, Index last);

/// Smallest k with epsilon(k) <= threshold, if any.
std::optional<Index> first_below(const ConvergenceTrace& trace, double threshold);

template <typename F>
auto timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return std::pair{std::move(value), elapsed.count()};
}

/// Median wall time of one series term (one sparse product plus accumulate),
/// measured over `repeats` runs of `terms` terms each.
double seconds_per_iteration(const Graph& g, Decay kind, double delta, Index terms, int repeats = 5);

}  // namespace pgain
