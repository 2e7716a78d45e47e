#pragma once

#include "pgain/centrality.hpp"
#include "pgain/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace pgain {

/// Walk-length penalty of the potential gain series.
enum class Decay {
  geometric,    // phi(k) = delta^(k-1)
  exponential,  // phi(k) = 1 / (k-1)!
};

std::string to_string(Decay kind);
Decay parse_decay(const std::string& name);

inline constexpr double kDefaultDeltaStar = 0.5;
inline constexpr double kDefaultGainTolerance = 1e-12;
/// Upper bound on series length when no explicit walk length is given.
inline constexpr Index kSeriesSafetyCap = 1'000'000;

struct GainParams {
  /// Geometric decay factor, must lie in (0, 1 / lambda1). Ignored by EPG.
  double delta = 0.0;
  /// Spectral radius used to validate delta; estimated by power iteration when <= 0.
  double lambda1 = 0.0;
  /// Longest walk included (k*); 0 leaves the tolerance as the only stop rule.
  Index max_walk_length = 0;
  /// Stop once ||latest term|| / ||partial sum|| drops below this; 0 disables.
  double tolerance = kDefaultGainTolerance;

  double delta_star() const noexcept { return delta * lambda1; }

  static GainParams from_delta_star(double delta_star, double lambda1);
  /// delta = 1 / (||A||_inf + 1), i.e. one over (max degree + 1).
  static GainParams foster(const Graph& g, double lambda1);
};

/// Relative L2 truncation error of the k-term partial sum against a reference.
struct ConvergenceTrace {
  Decay kind = Decay::geometric;
  double delta = 0.0;
  double delta_star = 0.0;
  std::vector<std::pair<Index, double>> errors;
};

template <typename Scalar>
struct SeriesResult {
  Vector<Scalar> sum;
  Index terms = 0;
  bool converged = false;
  /// Largest ||term||_2 seen; EPG terms peak near k = lambda1 before decaying.
  Scalar max_term_norm = Scalar(0);
};

/// Sums sum_{k=1}^{K} phi(k) A^k 1 with one sparse product per term.
///
/// geometric:   y_1 = A 1, y_k = (delta A) y_{k-1}
/// exponential: t_1 = A 1, t_k = A t_{k-1} / (k - 1)
///
/// `observe(k, partial_sum)` runs after every accumulated term. K is the first
/// k at which max_len is reached or the relative size of the latest term falls
/// below tol.
template <typename Scalar, typename Observer>
SeriesResult<Scalar> walk_series(const Graph& g, Decay kind, Scalar delta, Index max_len, Scalar tol,
                                 Observer&& observe) {
  const Index n = g.node_count();
  const Index cap = max_len > 0 ? max_len : kSeriesSafetyCap;
  SeriesResult<Scalar> result;
  Vector<Scalar> term = spmv(g, Vector<Scalar>::Ones(n));
  Vector<Scalar> next(n);
  result.sum = term;

  for (Index k = 1;; ++k) {
    const Scalar term_norm = term.norm();
    const Scalar sum_norm = result.sum.norm();
    result.terms = k;
    result.max_term_norm = std::max(result.max_term_norm, term_norm);
    observe(k, static_cast<const Vector<Scalar>&>(result.sum));

    if (!std::isfinite(static_cast<double>(sum_norm))) return result;
    if (sum_norm == Scalar(0) || (tol > Scalar(0) && term_norm < tol * sum_norm)) {
      result.converged = true;
      return result;
    }
    if (k >= cap) {
      result.converged = max_len > 0;
      return result;
    }
    const Scalar scale = kind == Decay::geometric ? delta : Scalar(1) / static_cast<Scalar>(k);
    spmv_into(g, term, scale, next);
    term.swap(next);
    result.sum += term;
  }
}

template <typename Scalar>
SeriesResult<Scalar> walk_series(const Graph& g, Decay kind, Scalar delta, Index max_len, Scalar tol) {
  return walk_series(g, kind, delta, max_len, tol, [](Index, const Vector<Scalar>&) {});
}

/// GPG: sum_{k>=1} delta^(k-1) A^k 1, which equals A (I - delta A)^-1 1.
CentralityVector geometric_potential_gain(const Graph& g, GainParams params);

/// EPG: sum_{k>=1} A^k 1 / (k-1)!, which equals A exp(A) 1. delta is ignored.
CentralityVector exponential_potential_gain(const Graph& g, const GainParams& params);

CentralityVector potential_gain(const Graph& g, const GainParams& params, Decay kind);

/// Decay at which geometric and exponential gains agree on an eigencomponent
/// with eigenvalue lambda: (e^lambda - 1) / (lambda e^lambda). Callers check
/// that the result is below 1 / lambda1 before using it as a geometric delta.
double crossover_delta(double lambda);

/// Largest term norm before EPG reports a possible overflow.
inline constexpr double kOverflowWarning = 1e300;

/// Runs the requested gain and records epsilon(k) for every k up to the stop.
///
/// The reference is the dense oracle when n <= 64, otherwise the same series
/// continued until the relative term size falls below 1e-15.
std::pair<CentralityVector, ConvergenceTrace> gain_with_trace(const Graph& g, GainParams params, Decay kind);

/// Same as above against a caller-supplied reference vector.
std::pair<CentralityVector, ConvergenceTrace> gain_with_trace(const Graph& g, GainParams params, Decay kind,
                                                              const VectorXd& reference);

/// Reference value used by gain_with_trace.
VectorXd reference_gain(const Graph& g, const GainParams& params, Decay kind);

}  // namespace pgain
