#include "pgain/gain.hpp"

#include "pgain/oracle.hpp"
#include "pgain/spectral.hpp"

#include <cmath>

namespace pgain {

std::string to_string(Decay kind) { return kind == Decay::geometric ? "gpg" : "epg"; }

Decay parse_decay(const std::string& name) {
  if (name == "gpg" || name == "geometric") return Decay::geometric;
  if (name == "epg" || name == "exponential") return Decay::exponential;
  throw ParameterError("unknown decay '" + name + "'");
}

GainParams GainParams::from_delta_star(double delta_star, double lambda1) {
  if (!(delta_star > 0.0 && delta_star < 1.0)) throw ParameterError("delta* must lie in (0, 1)");
  if (!(lambda1 > 0.0)) throw ParameterError("delta* needs a positive spectral radius");
  GainParams p;
  p.delta = delta_star / lambda1;
  p.lambda1 = lambda1;
  return p;
}

GainParams GainParams::foster(const Graph& g, double lambda1) {
  GainParams p;
  p.delta = 1.0 / (static_cast<double>(g.max_degree()) + 1.0);
  p.lambda1 = lambda1;
  return p;
}

namespace {

void check_stop_rule(const GainParams& p) {
  if (p.tolerance < 0.0 || std::isnan(p.tolerance)) throw ParameterError("tolerance must be non-negative");
  if (p.max_walk_length < 0) throw ParameterError("max walk length must be non-negative");
  if (p.tolerance == 0.0 && p.max_walk_length == 0)
    throw ParameterError("either a tolerance or a maximum walk length is required");
}

void validate_geometric(const Graph& g, GainParams& p) {
  if (!(p.delta > 0.0)) throw ParameterError("delta must be positive");
  if (!(p.lambda1 > 0.0)) p.lambda1 = power_iteration(g).lambda1;
  if (!(p.delta * p.lambda1 < 1.0))
    throw ParameterError("delta = " + std::to_string(p.delta) + " is not below 1 / lambda1 = " +
                         std::to_string(1.0 / p.lambda1) + "; the series diverges");
}

CentralityVector package(SeriesResult<double>&& series, const GainParams& p, Decay kind) {
  CentralityVector cv;
  cv.scores = std::move(series.sum);
  cv.metric = to_string(kind);
  cv.iterations_used = series.terms;
  cv.converged = series.converged;
  cv.params["tolerance"] = p.tolerance;
  cv.params["max_walk_length"] = static_cast<double>(p.max_walk_length);
  if (kind == Decay::geometric) {
    cv.params["delta"] = p.delta;
    cv.params["delta_star"] = p.delta_star();
    cv.params["lambda1"] = p.lambda1;
  }
  cv.params["max_term_norm"] = series.max_term_norm;
  if (series.max_term_norm > kOverflowWarning)
    cv.warnings.push_back("term norm reached " + std::to_string(series.max_term_norm) + ", close to overflow");
  if (!cv.scores.allFinite()) {
    cv.converged = false;
    cv.warnings.push_back("series produced non-finite values");
  } else if (!series.converged) {
    cv.warnings.push_back("series stopped at the safety cap before reaching the tolerance");
  }
  return cv;
}

}  // namespace

CentralityVector geometric_potential_gain(const Graph& g, GainParams params) {
  check_stop_rule(params);
  validate_geometric(g, params);
  return package(walk_series<double>(g, Decay::geometric, params.delta, params.max_walk_length, params.tolerance),
                 params, Decay::geometric);
}

CentralityVector exponential_potential_gain(const Graph& g, const GainParams& params) {
  check_stop_rule(params);
  return package(walk_series<double>(g, Decay::exponential, 0.0, params.max_walk_length, params.tolerance), params,
                 Decay::exponential);
}

CentralityVector potential_gain(const Graph& g, const GainParams& params, Decay kind) {
  return kind == Decay::geometric ? geometric_potential_gain(g, params) : exponential_potential_gain(g, params);
}

double crossover_delta(double lambda) {
  if (lambda == 0.0) throw ParameterError("crossover is undefined for a zero eigenvalue: the gains agree for every delta");
  // (e^l - 1) / (l e^l) = -expm1(-l) / l
  return -std::expm1(-lambda) / lambda;
}

VectorXd reference_gain(const Graph& g, const GainParams& params, Decay kind) {
  if (g.node_count() <= kOracleMaxNodes) {
    return oracle_gain(g, kind, kind == Decay::geometric ? params.delta : 0.0);
  }
  return walk_series<double>(g, kind, params.delta, 0, 1e-15).sum;
}

std::pair<CentralityVector, ConvergenceTrace> gain_with_trace(const Graph& g, GainParams params, Decay kind) {
  check_stop_rule(params);
  if (kind == Decay::geometric) validate_geometric(g, params);
  return gain_with_trace(g, params, kind, reference_gain(g, params, kind));
}

std::pair<CentralityVector, ConvergenceTrace> gain_with_trace(const Graph& g, GainParams params, Decay kind,
                                                              const VectorXd& reference) {
  check_stop_rule(params);
  if (kind == Decay::geometric) validate_geometric(g, params);
  if (reference.size() != g.node_count()) throw DimensionError("reference length does not match node count");

  ConvergenceTrace trace;
  trace.kind = kind;
  if (kind == Decay::geometric) {
    trace.delta = params.delta;
    trace.delta_star = params.delta_star();
  }
  const double ref_norm = reference.norm();
  auto series = walk_series<double>(g, kind, params.delta, params.max_walk_length, params.tolerance,
                                    [&](Index k, const VectorXd& partial) {
                                      const double err = ref_norm > 0.0 ? (reference - partial).norm() / ref_norm
                                                                        : (reference - partial).norm();
                                      trace.errors.emplace_back(k, err);
                                    });
  return {package(std::move(series), params, kind), std::move(trace)};
}

}  // namespace pgain
