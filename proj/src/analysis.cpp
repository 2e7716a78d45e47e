#include "pgain/analysis.hpp"

#include "pgain/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pgain {

VectorXd average_ranks(const VectorXd& values) {
  const Index n = values.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values(a) < values(b); });

  VectorXd ranks(n);
  for (Index start = 0; start < n;) {
    Index end = start + 1;
    while (end < n && values(order[end]) == values(order[start])) ++end;
    // positions start..end-1 hold equal values; 1-based mean rank
    const double rank = 0.5 * static_cast<double>(start + 1 + end);
    for (Index p = start; p < end; ++p) ranks(order[p]) = rank;
    start = end;
  }
  return ranks;
}

double spearman_rho(const VectorXd& a, const VectorXd& b) {
  if (a.size() != b.size())
    throw DimensionError("spearman: lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                         " differ");
  if (a.size() < 2) throw DimensionError("spearman: need at least two observations");
  if (!a.allFinite() || !b.allFinite()) throw ParameterError("spearman: non-finite input");

  const VectorXd ra = average_ranks(a);
  const VectorXd rb = average_ranks(b);
  const double mean = 0.5 * static_cast<double>(a.size() + 1);
  const VectorXd da = ra.array() - mean;
  const VectorXd db = rb.array() - mean;
  const double va = da.squaredNorm();
  const double vb = db.squaredNorm();
  if (va == 0.0 || vb == 0.0) throw UndefinedCorrelation("spearman: constant input has no rank variance");
  if (ra == rb) return 1.0;
  const double rho = da.dot(db) / std::sqrt(va * vb);
  return std::clamp(rho, -1.0, 1.0);
}

CorrelationReport correlation_matrix(std::span<const CentralityVector> vectors) {
  if (vectors.size() < 2) throw DimensionError("correlation matrix needs at least two vectors");
  std::vector<const CentralityVector*> sorted;
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size()) throw DimensionError("correlation matrix: vector lengths differ");
    sorted.push_back(&v);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CentralityVector* x, const CentralityVector* y) { return x->metric < y->metric; });

  const auto count = static_cast<Index>(sorted.size());
  CorrelationReport report;
  report.rho = MatrixXd::Identity(count, count);
  for (const auto* v : sorted) report.metric_names.push_back(v->metric);
  for (Index i = 0; i < count; ++i) {
    for (Index j = i + 1; j < count; ++j) {
      double value = std::nan("");
      try {
        value = spearman_rho(sorted[i]->scores, sorted[j]->scores);
      } catch (const Error& e) {
        report.missing.emplace_back(i, j, e.what());
      }
      report.rho(i, j) = report.rho(j, i) = value;
    }
  }
  return report;
}

std::vector<double> default_delta_star_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
  return grid;
}

namespace {

std::optional<double> try_rho(const VectorXd& a, const VectorXd& b) {
  try {
    return spearman_rho(a, b);
  } catch (const UndefinedCorrelation&) {
    return std::nullopt;
  }
}

}  // namespace

SweepResult delta_sweep(const Graph& g, std::span<const double> grid, double alpha,
                        std::optional<SpectralEstimate> spectral, double tolerance) {
  if (grid.empty()) throw ParameterError("delta* grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] < 1.0)) throw ParameterError("delta* grid values must lie in (0, 1)");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ParameterError("delta* grid must be strictly ascending");
  }
  if (!spectral) spectral = power_iteration(g);
  const double lambda1 = spectral->lambda1;

  const VectorXd deg = degree_centrality(g).scores;
  const VectorXd& ec = spectral->eigenvector;
  const VectorXd pr = pagerank(g, alpha, tolerance).scores;
  GainParams epg_params;
  epg_params.tolerance = tolerance;
  const VectorXd epg = exponential_potential_gain(g, epg_params).scores;

  SweepResult result;
  result.lambda1 = lambda1;
  result.alpha = alpha;
  for (const double ds : grid) {
    GainParams p = GainParams::from_delta_star(ds, lambda1);
    p.tolerance = tolerance;
    const VectorXd gpg = geometric_potential_gain(g, p).scores;
    const VectorXd katz = katz_centrality(g, p.delta, tolerance, kBaselineMaxIterations, lambda1).scores;
    SweepPoint point;
    point.delta_star = ds;
    point.rho_deg = try_rho(gpg, deg);
    point.rho_ec = try_rho(gpg, ec);
    point.rho_pr = try_rho(gpg, pr);
    point.rho_katz = try_rho(gpg, katz);
    point.rho_epg = try_rho(gpg, epg);
    result.points.push_back(point);
  }
  return result;
}

std::vector<ConvergenceTrace> convergence_report(const Graph& g, std::span<const Decay> kinds,
                                                 std::span<const double> delta_stars, double lambda1,
                                                 Index max_walk_length, double tolerance) {
  std::vector<ConvergenceTrace> traces;
  for (const Decay kind : kinds) {
    if (kind == Decay::exponential) {
      GainParams p;
      p.lambda1 = lambda1;
      p.max_walk_length = max_walk_length;
      p.tolerance = tolerance;
      traces.push_back(gain_with_trace(g, p, kind).second);
      continue;
    }
    for (const double ds : delta_stars) {
      GainParams p = GainParams::from_delta_star(ds, lambda1);
      p.max_walk_length = max_walk_length;
      p.tolerance = tolerance;
      traces.push_back(gain_with_trace(g, p, kind).second);
    }
  }
  return traces;
}

double log_error_slope(const ConvergenceTrace& trace, Index first, Index last) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& [k, err] : trace.errors) {
    if (k < first || k > last) continue;
    if (!(err > 0.0)) throw ParameterError("log slope over a zero error at k = " + std::to_string(k));
    const double x = static_cast<double>(k);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) throw ParameterError("log slope needs at least two points in range");
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::optional<Index> first_below(const ConvergenceTrace& trace, double threshold) {
  for (const auto& [k, err] : trace.errors)
    if (err <= threshold) return k;
  return std::nullopt;
}

double seconds_per_iteration(const Graph& g, Decay kind, double delta, Index terms, int repeats) {
  if (terms < 1 || repeats < 1) throw ParameterError("timing needs terms >= 1 and repeats >= 1");
  std::vector<double> samples;
  for (int r = 0; r < repeats; ++r) {
    auto [series, seconds] = timed([&] { return walk_series<double>(g, kind, delta, terms, 0.0); });
    samples.push_back(seconds / static_cast<double>(series.terms));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

}  // namespace pgain
