#include "pgain/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pgain {

Graph Graph::from_edges(Index node_count, std::span<const std::pair<Index, Index>> edges,
                        std::vector<std::string> labels) {
  if (node_count < 0) throw ParameterError("node count must be non-negative");
  if (!labels.empty() && static_cast<Index>(labels.size()) != node_count)
    throw DimensionError("label count does not match node count");

  std::vector<std::pair<Index, Index>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[static_cast<std::size_t>(arc.first) + 1];
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.neighbors_.reserve(arcs.size());
  for (const auto& arc : arcs) g.neighbors_.push_back(arc.second);

  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(node_count));
    for (Index i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], static_cast<Index>(i)).second)
      throw ParameterError("duplicate node label '" + g.labels_[i] + "'");
  }
  return g;
}

bool Graph::has_edge(Index i, Index j) const {
  const auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), j);
}

Index Graph::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

Index Graph::max_degree() const noexcept {
  Index best = 0;
  for (Index i = 0; i < node_count(); ++i) best = std::max(best, degree(i));
  return best;
}

namespace {

bool is_comment(const std::string& line, std::size_t first, const std::vector<std::string>& prefixes) {
  for (const auto& prefix : prefixes) {
    if (!prefix.empty() && line.compare(first, prefix.size(), prefix) == 0) return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options, ParseReport* report) {
  ParseReport local;
  std::unordered_map<std::string, Index> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<Index, Index>> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<Index>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (is_comment(line, first, options.comment_prefixes)) continue;

    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a >> b)) throw ParseError("expected two node labels, got '" + line + "'", line_no);
    ++local.edges_read;
    if (a == b) {
      if (!options.drop_self_loops) throw ParseError("self-loop on node '" + a + "'", line_no);
      ++local.self_loops_dropped;
      continue;
    }
    const Index u = intern(a);
    const Index v = intern(b);
    edges.emplace_back(u, v);
  }
  local.lines = line_no;

  const auto node_count = static_cast<Index>(labels.size());
  Graph g = Graph::from_edges(node_count, edges, std::move(labels));
  local.duplicates_collapsed = edges.size() - static_cast<std::size_t>(g.edge_count());
  if (report) *report = local;
  return g;
}

Graph read_edge_list_file(const std::string& path, const ParseOptions& options, ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edge_list(in, options, report);
}

void write_canonical_edge_list(std::ostream& out, const Graph& g) {
  for (Index i = 0; i < g.node_count(); ++i) {
    for (const Index j : g.neighbors(i)) {
      if (j > i) out << g.label(i) << ' ' << g.label(j) << '\n';
    }
  }
}

bool same_labeled_edges(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (Index i = 0; i < a.node_count(); ++i) {
    const Index bi = b.index_of(a.label(i));
    if (bi < 0 || a.degree(i) != b.degree(bi)) return false;
    for (const Index j : a.neighbors(i)) {
      const Index bj = b.index_of(a.label(j));
      if (bj < 0 || !b.has_edge(bi, bj)) return false;
    }
  }
  return true;
}

std::vector<Index> degree_vector(const Graph& g) {
  std::vector<Index> degrees(static_cast<std::size_t>(g.node_count()));
  for (Index i = 0; i < g.node_count(); ++i) degrees[static_cast<std::size_t>(i)] = g.degree(i);
  return degrees;
}

}  // namespace pgain
