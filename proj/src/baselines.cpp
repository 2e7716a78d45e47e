#include "pgain/baselines.hpp"

#include "pgain/spectral.hpp"

#include <cmath>

namespace pgain {

CentralityVector degree_centrality(const Graph& g) {
  CentralityVector cv;
  cv.metric = "deg";
  cv.scores.resize(g.node_count());
  for (Index i = 0; i < g.node_count(); ++i) cv.scores(i) = static_cast<double>(g.degree(i));
  return cv;
}

CentralityVector katz_centrality(const Graph& g, double delta, double tolerance, Index max_iter, double lambda1) {
  if (!(delta > 0.0)) throw ParameterError("Katz delta must be positive");
  if (!(tolerance > 0.0)) throw ParameterError("Katz tolerance must be positive");
  if (max_iter < 1) throw ParameterError("Katz needs max_iter >= 1");
  if (!(lambda1 > 0.0)) lambda1 = g.empty() ? 0.0 : power_iteration(g).lambda1;
  if (!(delta * lambda1 < 1.0)) throw ParameterError("Katz delta must lie below 1 / lambda1");

  const Index n = g.node_count();
  CentralityVector cv;
  cv.metric = "katz";
  cv.params["delta"] = delta;
  cv.params["delta_star"] = delta * lambda1;
  cv.params["lambda1"] = lambda1;
  cv.params["tolerance"] = tolerance;
  cv.converged = false;

  VectorXd x = VectorXd::Ones(n);
  VectorXd next(n);
  for (Index it = 1; it <= max_iter; ++it) {
    spmv_into(g, x, delta, next);
    next.array() += 1.0;
    const double change = (next - x).norm();
    const double scale = next.norm();
    x.swap(next);
    cv.iterations_used = it;
    if (change <= tolerance * scale) {
      cv.converged = true;
      break;
    }
  }
  if (!cv.converged) cv.warnings.push_back("Katz iteration did not converge");
  cv.scores = std::move(x);
  return cv;
}

CentralityVector pagerank(const Graph& g, double alpha, double tolerance, Index max_iter) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("PageRank damping must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw ParameterError("PageRank tolerance must be positive");
  if (g.empty()) throw ParameterError("PageRank on an empty graph");

  const Index n = g.node_count();
  const double inv_n = 1.0 / static_cast<double>(n);
  CentralityVector cv;
  cv.metric = "pr";
  cv.params["alpha"] = alpha;
  cv.params["tolerance"] = tolerance;
  cv.converged = false;

  VectorXd inv_degree(n);
  for (Index i = 0; i < n; ++i) inv_degree(i) = g.degree(i) > 0 ? 1.0 / static_cast<double>(g.degree(i)) : 0.0;

  VectorXd p = VectorXd::Constant(n, inv_n);
  VectorXd next(n);
  for (Index it = 1; it <= max_iter; ++it) {
    double dangling = 0.0;
    for (Index i = 0; i < n; ++i)
      if (g.degree(i) == 0) dangling += p(i);
    const VectorXd flow = p.cwiseProduct(inv_degree);
    spmv_into(g, flow, alpha, next);
    next.array() += (1.0 - alpha) * inv_n + alpha * dangling * inv_n;
    const double change = (next - p).lpNorm<1>();
    p.swap(next);
    cv.iterations_used = it;
    if (change < tolerance) {
      cv.converged = true;
      break;
    }
  }
  if (!cv.converged) cv.warnings.push_back("PageRank did not converge");
  cv.scores = p / p.sum();
  return cv;
}

CentralityVector communicability_vector(const Graph& g, double tolerance, Index max_iter) {
  if (!(tolerance > 0.0)) throw ParameterError("communicability tolerance must be positive");
  const Index n = g.node_count();
  CentralityVector cv;
  cv.metric = "comm";
  cv.params["tolerance"] = tolerance;
  cv.converged = false;

  VectorXd term = VectorXd::Ones(n);
  VectorXd sum = term;
  VectorXd next(n);
  for (Index j = 1; j <= max_iter; ++j) {
    spmv_into(g, term, 1.0 / static_cast<double>(j), next);
    term.swap(next);
    sum += term;
    cv.iterations_used = j;
    const double sum_norm = sum.norm();
    if (!std::isfinite(sum_norm)) break;
    if (term.norm() < tolerance * sum_norm) {
      cv.converged = true;
      break;
    }
  }
  if (!cv.converged) cv.warnings.push_back("communicability series did not converge");
  cv.scores = std::move(sum);
  return cv;
}

}  // namespace pgain
