// Acceptance suite: one PASS/FAIL/SKIP line per criterion, non-zero exit on any FAIL.

#include "cli.hpp"
#include "fixtures.hpp"
#include "pgain/analysis.hpp"
#include "pgain/baselines.hpp"
#include "pgain/gain.hpp"
#include "pgain/generators.hpp"
#include "pgain/oracle.hpp"
#include "pgain/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pgain;
namespace fs = std::filesystem;

namespace {

enum class Outcome { pass, fail, skip };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

Verdict pass(std::string detail) { return {Outcome::pass, std::move(detail)}; }
Verdict fail(std::string detail) { return {Outcome::fail, std::move(detail)}; }
Verdict skip(std::string detail) { return {Outcome::skip, std::move(detail)}; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double max_relative(const VectorXd& got, const VectorXd& want) {
  return ((got - want).array().abs() / want.array().abs()).maxCoeff();
}

GainParams exp_params(double tol = 1e-12) {
  GainParams p;
  p.tolerance = tol;
  return p;
}

Verdict closed_forms() {
  struct Case {
    const char* name;
    Graph g;
    Decay kind;
    double delta, lambda1, expected;
  };
  const std::vector<Case> cases{
      {"GPG K3", fixtures::k3(), Decay::geometric, 0.25, 2.0, 4.0},
      {"EPG K3", fixtures::k3(), Decay::exponential, 0.0, 2.0, 2.0 * std::exp(2.0)},
      {"GPG P2", fixtures::p2(), Decay::geometric, 0.5, 1.0, 2.0},
      {"EPG P2", fixtures::p2(), Decay::exponential, 0.0, 1.0, std::exp(1.0)},
  };
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    GainParams p;
    p.delta = c.delta;
    p.lambda1 = c.lambda1;
    auto [cv, seconds] = timed([&] { return potential_gain(c.g, p, c.kind); });
    const double err = (cv.scores.array() - c.expected).abs().maxCoeff() / c.expected;
    ok = ok && err <= 1e-8 && seconds < 1e-3;
    detail += std::string(c.name) + " err=" + num(err) + " t=" + num(seconds * 1e3) + "ms; ";
  }
  return ok ? pass(detail) : fail(detail);
}

Verdict oracle_equivalence() {
  const auto graphs = fixtures::random_graphs(50, 2024);
  double worst = 0.0;
  std::string worst_name;
  auto track = [&](double err, const char* name) {
    if (err > worst) {
      worst = err;
      worst_name = name;
    }
  };
  auto [unused, seconds] = timed([&] {
    for (const Graph& g : graphs) {
      const double lambda1 = power_iteration(g).lambda1;
      const GainParams p = GainParams::from_delta_star(0.5, lambda1);
      track(max_relative(geometric_potential_gain(g, p).scores, oracle_gain(g, Decay::geometric, p.delta)), "gpg");
      track(max_relative(exponential_potential_gain(g, exp_params()).scores, oracle_gain(g, Decay::exponential, 0.0)),
            "epg");
      track(max_relative(katz_centrality(g, p.delta, 1e-12, kBaselineMaxIterations, lambda1).scores,
                         oracle_katz(g, p.delta)),
            "katz");
      track(max_relative(communicability_vector(g).scores, oracle_communicability(g)), "comm");
      track(max_relative(pagerank(g).scores, oracle_pagerank(g, kDefaultDamping)), "pr");
    }
    return 0;
  });
  (void)unused;
  const std::string detail = "50 graphs, worst relative error " + num(worst) + " (" + worst_name + "), " +
                             num(seconds) + "s";
  return worst <= 1e-9 && seconds < 5.0 ? pass(detail) : fail(detail);
}

Verdict crossover() {
  const double dc = crossover_delta(2.0);
  GainParams p;
  p.delta = dc;
  p.lambda1 = 2.0;
  const VectorXd gpg = geometric_potential_gain(fixtures::k3(), p).scores;
  const VectorXd epg = exponential_potential_gain(fixtures::k3(), exp_params()).scores;
  const double err = max_relative(gpg, epg);
  const std::string detail = "delta_c=" + num(dc) + " relative gap " + num(err);
  return err <= 1e-6 && std::abs(dc - (std::exp(2.0) - 1) / (2 * std::exp(2.0))) < 1e-15 ? pass(detail)
                                                                                           : fail(detail);
}

Verdict geometric_rate() {
  const auto graphs = fixtures::random_graphs(10, 4242);
  double worst_excess = -1.0;
  for (const Graph& g : graphs) {
    const double lambda1 = power_iteration(g).lambda1;
    for (const double ds : {0.25, 0.5, 0.75}) {
      GainParams p = GainParams::from_delta_star(ds, lambda1);
      p.max_walk_length = 21;
      p.tolerance = 0.0;
      const auto [cv, trace] = gain_with_trace(g, p, Decay::geometric);
      for (Index k = 5; k <= 20; ++k) {
        const double ratio = trace.errors[k].second / trace.errors[k - 1].second;
        worst_excess = std::max(worst_excess, ratio - (p.delta * lambda1 + 0.05));
      }
    }
  }
  const std::string detail = "max (ratio - (delta*lambda1 + 0.05)) = " + num(worst_excess);
  return worst_excess <= 0.0 ? pass(detail) : fail(detail);
}

Verdict exponential_bound() {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 1; graphs.size() < 10 && seed < 200; ++seed) {
    const Index n = 10 + static_cast<Index>(seed % 40);
    Graph g = seed % 2 ? generators::barabasi_albert(n, 1 + seed % 2, seed) : generators::erdos_renyi(n, 0.12, seed);
    if (g.edge_count() > 0 && power_iteration(g).lambda1 <= 5.0) graphs.push_back(std::move(g));
  }
  double worst = 0.0, lambda_max = 0.0;
  for (const Graph& g : graphs) {
    const double lambda1 = power_iteration(g).lambda1;
    lambda_max = std::max(lambda_max, lambda1);
    const double target = 2.0 * std::exp(1.0) * lambda1;
    GainParams p;
    p.max_walk_length = static_cast<Index>(std::ceil(target));
    p.tolerance = 0.0;
    const auto [cv, trace] = gain_with_trace(g, p, Decay::exponential);
    const double bound = std::pow(0.5, target) / std::sqrt(lambda1);
    worst = std::max(worst, trace.errors.back().second / bound);
  }
  const std::string detail = std::to_string(graphs.size()) + " graphs (lambda1 <= " + num(lambda_max) +
                             "), max eps_e / bound = " + num(worst);
  return graphs.size() == 10 && worst <= 1.0 ? pass(detail) : fail(detail);
}

std::vector<std::pair<Index, double>> read_trace_csv(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<Index, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stoll(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

Verdict figure_shapes() {
  const fs::path dir = fs::temp_directory_path() / "pgain_acceptance_shapes";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string input = (dir / "ba1000.txt").string();
  std::ostringstream out, err;
  if (cli::run({"generate", "ba", "1000", "3", "--seed", "1", "--out", input}, out, err) != 0 ||
      cli::run({"convergence", "--metric", "all", "--delta-star", "0.5", "--out", dir.string(), input}, out, err) != 0)
    return fail("CLI failed: " + err.str());

  const Graph g = read_edge_list_file(input);
  const double lambda1 = power_iteration(g).lambda1;
  ConvergenceTrace geo;
  geo.errors = read_trace_csv(dir / "convergence_gpg_0.5.csv");
  ConvergenceTrace expo;
  expo.errors = read_trace_csv(dir / "convergence_epg.csv");
  fs::remove_all(dir);

  bool strictly_decreasing = true;
  for (std::size_t i = 5; i < 20 && i < geo.errors.size(); ++i)
    strictly_decreasing = strictly_decreasing && geo.errors[i].second < geo.errors[i - 1].second;
  const double slope = log_error_slope(geo, 5, 20);
  const double expected_slope = std::log(0.5);
  const double slope_gap = std::abs(slope - expected_slope) / std::abs(expected_slope);

  const double target = 2.0 * std::exp(1.0) * lambda1;
  const auto k_e = first_below(expo, 1e-6);
  const double factor = k_e ? std::max(target / static_cast<double>(*k_e), static_cast<double>(*k_e) / target) : INFINITY;

  const std::string detail = "lambda1=" + num(lambda1) + " slope=" + num(slope) + " vs log(delta*lambda1)=" +
                             num(expected_slope) + " (" + num(100 * slope_gap) + "%); eps_e<=1e-6 at k=" +
                             (k_e ? std::to_string(*k_e) : "never") + " vs 2e*lambda1=" + num(target) +
                             " (factor " + num(factor) + ")";
  return strictly_decreasing && slope_gap <= 0.10 && factor <= 1.5 ? pass(detail) : fail(detail);
}

Verdict correlation_limits() {
  const Graph g = fixtures::star_plus_tail();
  std::vector<double> grid{0.01};
  for (const double ds : default_delta_star_grid()) grid.push_back(ds);
  grid.push_back(0.99);
  const auto sweep = delta_sweep(g, grid, kDefaultDamping);
  const double rho_deg = sweep.points.front().rho_deg.value_or(NAN);
  double min_katz = 1.0;
  for (const auto& p : sweep.points) min_katz = std::min(min_katz, p.rho_katz.value_or(-2.0));
  const double rho_ec = sweep.points.back().rho_ec.value_or(NAN);
  const std::string detail = "rho(GPG,DEG)@0.01=" + num(rho_deg) + " min rho(GPG,Katz)=" + num(min_katz) +
                             " rho(GPG,EC)@0.99=" + num(rho_ec);
  return rho_deg == 1.0 && min_katz >= 0.999 && rho_ec >= 0.95 ? pass(detail) : fail(detail);
}

Verdict scalability() {
  const Graph small = generators::barabasi_albert(100'000, 3, 1);
  const Graph large = generators::barabasi_albert(200'000, 3, 1);
  // warm-up so the first measurement does not pay for page faults
  seconds_per_iteration(small, Decay::exponential, 0.0, 5, 1);
  const double t_small = seconds_per_iteration(small, Decay::exponential, 0.0, 20, 7);
  const double t_large = seconds_per_iteration(large, Decay::exponential, 0.0, 20, 7);
  const double ratio = t_large / t_small;
  const std::string detail = "per-iteration " + num(t_small * 1e3) + "ms (100k) vs " + num(t_large * 1e3) +
                             "ms (200k), ratio " + num(ratio);
  return ratio >= 1.5 && ratio <= 3.0 ? pass(detail) : fail(detail);
}

Verdict konect_datasets() {
  const char* root = std::getenv("PGAIN_KONECT_DIR");
  if (!root) return skip("PGAIN_KONECT_DIR not set");
  struct Dataset {
    const char* file;
    double lambda1;
  };
  const Dataset sets[] = {{"out.facebook-wosn-links", 132.57}, {"out.com-dblp", 115.85}, {"out.com-youtube", 210.40}};
  std::string detail;
  bool ok = true;
  bool any = false;
  for (const auto& d : sets) {
    const fs::path path = fs::path(root) / d.file;
    if (!fs::exists(path)) {
      detail += std::string(d.file) + " missing; ";
      continue;
    }
    any = true;
    const Graph g = read_edge_list_file(path.string());
    const auto est = power_iteration(g);
    const bool match = std::abs(est.lambda1 - d.lambda1) < 0.005;
    ok = ok && match;
    detail += std::string(d.file) + " lambda1=" + num(est.lambda1) + (match ? " ok; " : " MISMATCH; ");
    if (std::string(d.file) == "out.facebook-wosn-links") {
      const double rho = spearman_rho(degree_centrality(g).scores, pagerank(g).scores);
      ok = ok && rho >= 0.99;
      detail += "rho(DEG,PR)=" + num(rho) + "; ";
    }
  }
  if (!any) return skip(detail);
  return ok ? pass(detail) : fail(detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 closed-form regular graphs", closed_forms},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 crossover delta", crossover},
      {"4 geometric convergence rate", geometric_rate},
      {"5 exponential error bound", exponential_bound},
      {"6 convergence curve shapes on BA(1000,3)", figure_shapes},
      {"7 correlation limits", correlation_limits},
      {"8 linear per-iteration scaling", scalability},
      {"9 KONECT datasets (optional)", konect_datasets},
  };
  // An optional argument selects a single criterion by its number.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (only != 0 && std::atoi(name.c_str()) != only) continue;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIP";
    if (v.outcome == Outcome::fail) ++failures;
    std::cout << "[" << tag << "] " << name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criterion/criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
