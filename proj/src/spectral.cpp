#include "pgain/spectral.hpp"

#include <cmath>

namespace pgain {

SpectralEstimate power_iteration(const Graph& g, double tol, Index max_iter) {
  if (g.empty()) throw ParameterError("power iteration on an empty graph");
  if (!(tol > 0.0)) throw ParameterError("power iteration tolerance must be positive");
  if (max_iter < 1) throw ParameterError("power iteration needs max_iter >= 1");

  const Index n = g.node_count();
  VectorXd x = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  VectorXd ax(n);
  SpectralEstimate est;
  double previous = 0.0;

  for (Index it = 1; it <= max_iter; ++it) {
    spmv_into(g, x, 1.0, ax);
    const double rq = x.dot(ax);
    const double residual = (ax - rq * x).norm();
    est.iterations = it;
    est.lambda1 = rq;
    est.residual = residual;
    if (it > 1 && std::abs(rq - previous) <= tol * std::abs(rq) && residual <= 10.0 * tol * std::abs(rq)) {
      est.converged = true;
      break;
    }
    previous = rq;
    if (it == max_iter) break;
    ax += x;
    const double norm = ax.norm();
    if (norm == 0.0) break;
    x = ax / norm;
  }
  est.eigenvector = std::move(x);
  return est;
}

CentralityVector to_centrality(const SpectralEstimate& estimate) {
  CentralityVector cv;
  cv.scores = estimate.eigenvector;
  cv.metric = "ec";
  cv.params["lambda1"] = estimate.lambda1;
  cv.params["residual"] = estimate.residual;
  cv.iterations_used = estimate.iterations;
  cv.converged = estimate.converged;
  if (!estimate.converged) cv.warnings.push_back("power iteration did not converge");
  return cv;
}

CentralityVector eigenvector_centrality(const Graph& g, double tol, Index max_iter) {
  return to_centrality(power_iteration(g, tol, max_iter));
}

}  // namespace pgain
