#include "pgain/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace pgain {

namespace {

void guard(const Graph& g) {
  if (g.node_count() > kOracleMaxNodes)
    throw SizeGuardError("dense oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes, got " +
                         std::to_string(g.node_count()));
}

constexpr Index kMaxOracleTerms = 20000;

}  // namespace

MatrixXd dense_adjacency(const Graph& g) {
  guard(g);
  MatrixXd a = MatrixXd::Zero(g.node_count(), g.node_count());
  for (Index i = 0; i < g.node_count(); ++i)
    for (const Index j : g.neighbors(i)) a(i, j) = 1.0;
  return a;
}

MatrixXd walk_count(const Graph& g, Index k) {
  if (k < 0) throw ParameterError("walk length must be non-negative");
  const MatrixXd a = dense_adjacency(g);
  MatrixXd power = MatrixXd::Identity(a.rows(), a.cols());
  for (Index step = 0; step < k; ++step) power = power * a;
  return power;
}

double oracle_spectral_radius(const Graph& g) {
  const MatrixXd a = dense_adjacency(g);
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Index oracle_series_length(Decay kind, double delta, double lambda1) {
  constexpr double floor = 1e-17;
  if (lambda1 <= 0.0) return 2;
  if (kind == Decay::geometric) {
    const double rate = delta * lambda1;
    if (!(rate < 1.0)) throw ParameterError("delta must lie below 1 / lambda1");
    if (rate <= 0.0) return 2;
    // (rate^k) / (1 - rate) <= floor
    const double k = std::log(floor * (1.0 - rate)) / std::log(rate);
    return std::min<Index>(kMaxOracleTerms, static_cast<Index>(std::ceil(k)) + 10);
  }
  // First k past the peak with lambda^k / k! below floor (in log space).
  Index k = 1;
  double log_term = std::log(lambda1);
  while (k < kMaxOracleTerms && (static_cast<double>(k) < 2.0 * lambda1 || log_term > std::log(floor))) {
    ++k;
    log_term += std::log(lambda1) - std::log(static_cast<double>(k));
  }
  return k + 10;
}

VectorXd oracle_gain(const Graph& g, Decay kind, double delta, Index k_max) {
  guard(g);
  const MatrixXd a = dense_adjacency(g);
  const Index n = g.node_count();
  if (kind == Decay::geometric) {
    if (!(delta > 0.0)) throw ParameterError("delta must be positive");
    if (!(delta * oracle_spectral_radius(g) < 1.0)) throw ParameterError("delta must lie below 1 / lambda1");
  }
  if (k_max <= 0) k_max = oracle_series_length(kind, delta, oracle_spectral_radius(g));

  const VectorXd ones = VectorXd::Ones(n);
  VectorXd sum = VectorXd::Zero(n);
  MatrixXd scaled_power = a;  // phi(1) A^1
  for (Index k = 1; k <= k_max; ++k) {
    sum += scaled_power * ones;
    // phi(k+1) / phi(k)
    const double ratio = kind == Decay::geometric ? delta : 1.0 / static_cast<double>(k);
    scaled_power = (scaled_power * a) * ratio;
  }
  return sum;
}

VectorXd oracle_katz(const Graph& g, double delta) {
  const MatrixXd a = dense_adjacency(g);
  const Index n = g.node_count();
  const MatrixXd system = MatrixXd::Identity(n, n) - delta * a;
  return system.fullPivLu().solve(VectorXd::Ones(n));
}

VectorXd oracle_pagerank(const Graph& g, double alpha) {
  const MatrixXd a = dense_adjacency(g);
  const Index n = g.node_count();
  MatrixXd transition(n, n);  // row-stochastic P
  for (Index i = 0; i < n; ++i) {
    const double d = a.row(i).sum();
    if (d > 0.0)
      transition.row(i) = a.row(i) / d;
    else
      transition.row(i).setConstant(1.0 / static_cast<double>(n));
  }
  const MatrixXd system = MatrixXd::Identity(n, n) - alpha * transition.transpose();
  const VectorXd p = system.fullPivLu().solve(VectorXd::Constant(n, (1.0 - alpha) / static_cast<double>(n)));
  return p / p.sum();
}

VectorXd oracle_communicability(const Graph& g, Index k_max) {
  const MatrixXd a = dense_adjacency(g);
  const Index n = g.node_count();
  if (k_max <= 0) k_max = oracle_series_length(Decay::exponential, 0.0, oracle_spectral_radius(g));
  const VectorXd ones = VectorXd::Ones(n);
  VectorXd sum = ones;
  MatrixXd scaled_power = a;  // A^1 / 1!
  for (Index k = 1; k <= k_max; ++k) {
    sum += scaled_power * ones;
    scaled_power = (scaled_power * a) / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace pgain
