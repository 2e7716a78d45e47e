#include "cli.hpp"

#include "pgain/analysis.hpp"
#include "pgain/baselines.hpp"
#include "pgain/gain.hpp"
#include "pgain/generators.hpp"
#include "pgain/graph.hpp"
#include "pgain/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pgain::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct RunConfig {
  std::string input;
  std::string metric = "all";
  std::optional<double> delta;
  std::optional<double> delta_star;
  std::vector<double> delta_stars;
  double alpha = kDefaultDamping;
  double tol = kDefaultGainTolerance;
  Index max_k = 0;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string kind;
  std::vector<double> gen_args;
};

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path.string() + "'");
  return file;
}

// Writes to `path`, or to `fallback` when no path was given.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  auto file = open_output(path);
  write(file);
}

Graph load(const RunConfig& cfg, std::ostream& err) {
  ParseReport report;
  Graph g = read_edge_list_file(cfg.input, {}, &report);
  if (report.self_loops_dropped > 0) err << "warning: dropped " << report.self_loops_dropped << " self-loop(s)\n";
  if (report.duplicates_collapsed > 0)
    err << "note: collapsed " << report.duplicates_collapsed << " duplicate edge(s)\n";
  if (g.empty()) throw Error("'" + cfg.input + "' contains no edges");
  return g;
}

SpectralEstimate spectral_or_fail(const Graph& g, std::ostream& err) {
  auto est = power_iteration(g);
  if (!est.converged) err << "warning: power iteration did not converge (residual " << est.residual << ")\n";
  return est;
}

double resolve_delta(const RunConfig& cfg, double lambda1) {
  if (cfg.delta) return *cfg.delta;
  return GainParams::from_delta_star(cfg.delta_star.value_or(kDefaultDeltaStar), lambda1).delta;
}

void write_scores(const Graph& g, const CentralityVector& cv, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    json doc;
    doc["metric"] = cv.metric;
    doc["params"] = cv.params;
    doc["iterations"] = cv.iterations_used;
    doc["converged"] = cv.converged;
    json scores = json::array();
    for (Index i = 0; i < cv.size(); ++i) scores.push_back({{"node", g.label(i)}, {"score", cv.scores(i)}});
    doc["scores"] = std::move(scores);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "node,score\n";
  for (Index i = 0; i < cv.size(); ++i) out << g.label(i) << ',' << fmt_real(cv.scores(i)) << '\n';
}

int cmd_compute(const RunConfig& cfg, std::ostream& err) {
  static const std::vector<std::string> all{"deg", "ec", "pr", "katz", "gpg", "epg"};
  std::vector<std::string> metrics;
  if (cfg.metric == "all")
    metrics = all;
  else if (std::find(all.begin(), all.end(), cfg.metric) != all.end())
    metrics = {cfg.metric};
  else
    throw ParameterError("unknown metric '" + cfg.metric + "'");

  const Graph g = load(cfg, err);
  const auto start = std::chrono::steady_clock::now();
  const bool needs_spectrum = cfg.metric != "deg" && cfg.metric != "pr" && cfg.metric != "epg";
  std::optional<SpectralEstimate> spectral;
  if (needs_spectrum) spectral = spectral_or_fail(g, err);
  const double lambda1 = spectral ? spectral->lambda1 : 0.0;

  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  bool all_converged = true;
  for (const auto& metric : metrics) {
    auto [cv, seconds] = timed([&]() -> CentralityVector {
      if (metric == "deg") return degree_centrality(g);
      if (metric == "ec") return to_centrality(*spectral);
      if (metric == "pr") return pagerank(g, cfg.alpha, cfg.tol);
      if (metric == "katz") return katz_centrality(g, resolve_delta(cfg, lambda1), cfg.tol, kBaselineMaxIterations, lambda1);
      GainParams p;
      p.tolerance = cfg.tol;
      p.max_walk_length = cfg.max_k;
      if (metric == "gpg") {
        p.lambda1 = lambda1;
        p.delta = resolve_delta(cfg, lambda1);
        return geometric_potential_gain(g, p);
      }
      return exponential_potential_gain(g, p);
    });
    for (const auto& w : cv.warnings) err << "warning: " << metric << ": " << w << '\n';
    all_converged = all_converged && cv.converged;
    auto file = open_output(dir / (metric + (cfg.format == "json" ? ".json" : ".csv")));
    write_scores(g, cv, cfg, file);
    err << metric << ": n=" << g.node_count() << " m=" << g.edge_count();
    if (spectral) err << " lambda1=" << fmt_real(lambda1);
    err << " iterations=" << cv.iterations_used << " time=" << fmt_short(seconds) << "s"
        << (cv.converged ? "" : " (not converged)") << '\n';
  }
  const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
  err << "total time " << fmt_short(total.count()) << "s\n";
  return all_converged && (!spectral || spectral->converged) ? kOk : kNotConverged;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load(cfg, err);
  const auto spectral = spectral_or_fail(g, err);
  const std::vector<double> grid = cfg.delta_stars.empty() ? default_delta_star_grid() : cfg.delta_stars;
  const SweepResult sweep = delta_sweep(g, grid, cfg.alpha, spectral, cfg.tol);

  bool undefined = false;
  auto cell = [&](const std::optional<double>& v) {
    if (!v) undefined = true;
    return v ? fmt_real(*v) : std::string();
  };
  emit(cfg.out, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      json rows = json::array();
      auto field = [&](const std::optional<double>& v) {
        if (!v) undefined = true;
        return v ? json(*v) : json(nullptr);
      };
      for (const auto& p : sweep.points)
        rows.push_back({{"delta_star", p.delta_star},
                        {"rho_deg", field(p.rho_deg)},
                        {"rho_ec", field(p.rho_ec)},
                        {"rho_pr", field(p.rho_pr)},
                        {"rho_katz", field(p.rho_katz)},
                        {"rho_epg", field(p.rho_epg)}});
      os << json{{"lambda1", sweep.lambda1}, {"alpha", sweep.alpha}, {"points", rows}}.dump(2) << '\n';
      return;
    }
    os << "delta_star,rho_deg,rho_ec,rho_pr,rho_katz,rho_epg\n";
    for (const auto& p : sweep.points)
      os << fmt_short(p.delta_star) << ',' << cell(p.rho_deg) << ',' << cell(p.rho_ec) << ',' << cell(p.rho_pr)
         << ',' << cell(p.rho_katz) << ',' << cell(p.rho_epg) << '\n';
  });
  if (undefined) err << "warning: some correlations are undefined (constant score vector)\n";
  err << "sweep: n=" << g.node_count() << " m=" << g.edge_count() << " lambda1=" << fmt_real(sweep.lambda1)
      << " points=" << sweep.points.size() << '\n';
  return spectral.converged ? kOk : kNotConverged;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& err) {
  std::vector<Decay> kinds;
  if (cfg.metric == "all")
    kinds = {Decay::geometric, Decay::exponential};
  else
    kinds = {parse_decay(cfg.metric)};

  const Graph g = load(cfg, err);
  const auto spectral = spectral_or_fail(g, err);
  std::vector<double> stars = cfg.delta_stars;
  if (stars.empty()) stars = {cfg.delta_star.value_or(kDefaultDeltaStar)};
  const auto traces = convergence_report(g, kinds, stars, spectral.lambda1, cfg.max_k, cfg.tol);

  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  for (const auto& trace : traces) {
    std::string name = "convergence_" + to_string(trace.kind);
    if (trace.kind == Decay::geometric) name += "_" + fmt_short(trace.delta_star);
    auto file = open_output(dir / (name + (cfg.format == "json" ? ".json" : ".csv")));
    if (cfg.format == "json") {
      json doc{{"metric", to_string(trace.kind)}, {"lambda1", spectral.lambda1}, {"errors", json::array()}};
      if (trace.kind == Decay::geometric) doc["delta_star"] = trace.delta_star;
      for (const auto& [k, e] : trace.errors) doc["errors"].push_back({{"k", k}, {"epsilon", e}});
      file << doc.dump(2) << '\n';
    } else {
      file << "k,epsilon\n";
      for (const auto& [k, e] : trace.errors) file << k << ',' << fmt_real(e) << '\n';
    }
    err << name << ": " << trace.errors.size() << " terms, final epsilon "
        << (trace.errors.empty() ? 0.0 : trace.errors.back().second) << '\n';
  }
  return spectral.converged ? kOk : kNotConverged;
}

Index as_count(double v, const char* what) {
  if (v < 0 || v != static_cast<double>(static_cast<Index>(v)))
    throw ParameterError(std::string(what) + " must be a non-negative integer");
  return static_cast<Index>(v);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& a = cfg.gen_args;
  auto need = [&](std::size_t count, const char* usage) {
    if (a.size() != count) throw ParameterError(std::string("usage: generate ") + usage);
  };
  Graph g;
  if (cfg.kind == "complete") {
    need(1, "complete <n>");
    g = generators::complete(as_count(a[0], "n"));
  } else if (cfg.kind == "ring") {
    need(1, "ring <n>");
    g = generators::ring(as_count(a[0], "n"));
  } else if (cfg.kind == "star") {
    need(1, "star <leaves>");
    g = generators::star(as_count(a[0], "leaves"));
  } else if (cfg.kind == "grid") {
    need(2, "grid <rows> <cols>");
    g = generators::grid(as_count(a[0], "rows"), as_count(a[1], "cols"));
  } else if (cfg.kind == "er") {
    need(2, "er <n> <p> [--seed s]");
    g = generators::erdos_renyi(as_count(a[0], "n"), a[1], cfg.seed);
  } else if (cfg.kind == "ba") {
    need(2, "ba <n> <m0> [--seed s]");
    g = generators::barabasi_albert(as_count(a[0], "n"), as_count(a[1], "m0"), cfg.seed);
  } else {
    throw ParameterError("unknown generator '" + cfg.kind + "' (complete, ring, star, grid, er, ba)");
  }
  emit(cfg.out, out, [&](std::ostream& os) { write_canonical_edge_list(os, g); });
  err << cfg.kind << ": n=" << g.node_count() << " m=" << g.edge_count() << '\n';
  return kOk;
}

int cmd_spectral(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load(cfg, err);
  const auto est = power_iteration(g);
  if (cfg.format == "json") {
    out << json{{"lambda1", est.lambda1},
                {"residual", est.residual},
                {"iterations", est.iterations},
                {"converged", est.converged}}
               .dump(2)
        << '\n';
  } else {
    out << "lambda1," << fmt_real(est.lambda1) << "\nresidual," << fmt_real(est.residual) << "\niterations,"
        << est.iterations << "\nconverged," << (est.converged ? "true" : "false") << '\n';
  }
  return est.converged ? kOk : kNotConverged;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output path");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Walk-based centrality on undirected edge lists"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Per-node scores, one file per metric in --out (a directory)");
  compute->add_option("input", cfg.input, "Edge list")->required();
  compute->add_option("--metric", cfg.metric, "Metric")
      ->check(CLI::IsMember({"deg", "ec", "pr", "katz", "gpg", "epg", "all"}));
  auto* delta = compute->add_option("--delta", cfg.delta, "Geometric decay factor");
  compute->add_option("--delta-star", cfg.delta_star, "Decay as a fraction of 1/lambda1")->excludes(delta);
  compute->add_option("--alpha", cfg.alpha, "PageRank damping");
  compute->add_option("--tol", cfg.tol, "Relative tolerance");
  compute->add_option("--max-k", cfg.max_k, "Longest walk length (0 = tolerance only)");
  add_common(compute, cfg);

  auto* sweep = app.add_subcommand("sweep", "Spearman rho of GPG against the baselines over a delta* grid");
  sweep->add_option("input", cfg.input, "Edge list")->required();
  sweep->add_option("--delta-star", cfg.delta_stars, "Grid values (default 0.1 ... 0.9)");
  sweep->add_option("--alpha", cfg.alpha, "PageRank damping");
  sweep->add_option("--tol", cfg.tol, "Relative tolerance");
  add_common(sweep, cfg);

  auto* conv = app.add_subcommand("convergence", "epsilon(k) traces, one file per (metric, delta*) in --out");
  conv->add_option("input", cfg.input, "Edge list")->required();
  conv->add_option("--metric", cfg.metric, "gpg, epg or all")->check(CLI::IsMember({"gpg", "epg", "all"}));
  conv->add_option("--delta-star", cfg.delta_stars, "One or more delta* values (default 0.5)");
  conv->add_option("--tol", cfg.tol, "Relative tolerance");
  conv->add_option("--max-k", cfg.max_k, "Longest walk length (0 = tolerance only)");
  add_common(conv, cfg);

  auto* gen = app.add_subcommand("generate", "Synthetic edge list: complete|ring|star|grid|er|ba");
  gen->add_option("kind", cfg.kind, "Generator")->required();
  gen->add_option("args", cfg.gen_args, "Generator arguments");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* spec = app.add_subcommand("spectral", "Spectral radius by shifted power iteration");
  spec->add_option("input", cfg.input, "Edge list")->required();
  spec->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kFailure;
  }

  try {
    if (*compute) return cmd_compute(cfg, err);
    if (*sweep) return cmd_sweep(cfg, out, err);
    if (*conv) return cmd_convergence(cfg, err);
    if (*gen) return cmd_generate(cfg, out, err);
    if (*spec) return cmd_spectral(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace pgain::cli
