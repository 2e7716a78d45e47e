#pragma once

#include "pgain/common.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pgain {

/// Undirected simple graph in compressed sparse row form.
///
/// Every undirected edge {i, j} is stored twice (j in row i, i in row j).
/// Rows are sorted ascending and contain no self-loops or duplicates, so the
/// adjacency matrix is symmetric 0/1 with a zero diagonal. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from internal index pairs. Self-loops are skipped, duplicates and
  /// reversed duplicates collapse. Labels default to the decimal indices.
  static Graph from_edges(Index node_count, std::span<const std::pair<Index, Index>> edges,
                          std::vector<std::string> labels = {});

  Index node_count() const noexcept { return static_cast<Index>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  Index edge_count() const noexcept { return static_cast<Index>(neighbors_.size() / 2); }
  bool empty() const noexcept { return node_count() == 0; }

  Index degree(Index i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

  std::span<const Index> neighbors(Index i) const noexcept {
    return {neighbors_.data() + offsets_[i], static_cast<std::size_t>(degree(i))};
  }

  bool has_edge(Index i, Index j) const;

  std::span<const Index> offsets() const noexcept { return offsets_; }
  std::span<const Index> neighbor_indices() const noexcept { return neighbors_; }

  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Internal index of an external label, or -1.
  Index index_of(const std::string& label) const;

  Index max_degree() const noexcept;

  /// Structural equality: same labels in the same internal order and same rows.
  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<Index> offsets_;
  std::vector<Index> neighbors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

struct ParseOptions {
  std::vector<std::string> comment_prefixes{"%", "#"};
  /// When false a self-loop is a parse error instead of being dropped.
  bool drop_self_loops = true;
};

struct ParseReport {
  std::size_t lines = 0;
  std::size_t edges_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Reads a whitespace-separated edge list. Labels are arbitrary tokens mapped to
/// internal indices in first-seen order; fields beyond the second are ignored.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {}, ParseReport* report = nullptr);

Graph read_edge_list_file(const std::string& path, const ParseOptions& options = {},
                          ParseReport* report = nullptr);

/// Writes each edge once as "label_i label_j" with i < j, sorted by (i, j).
void write_canonical_edge_list(std::ostream& out, const Graph& g);

/// True when both graphs have the same label set and the same edges between
/// labels, regardless of internal index order.
bool same_labeled_edges(const Graph& a, const Graph& b);

/// Integer degrees; also the DEG centrality baseline.
std::vector<Index> degree_vector(const Graph& g);

/// out = scale * (A * x). Rows are summed in neighbor order, so the result is
/// bitwise reproducible.
template <typename Derived, typename OutDerived>
void spmv_into(const Graph& g, const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar scale,
               Eigen::MatrixBase<OutDerived>& out) {
  using Scalar = typename Derived::Scalar;
  const Index n = g.node_count();
  if (x.size() != n || out.size() != n)
    throw DimensionError("spmv: vector length " + std::to_string(x.size()) + " does not match node count " +
                         std::to_string(n));
  const auto offsets = g.offsets();
  const auto cols = g.neighbor_indices();
  for (Index i = 0; i < n; ++i) {
    Scalar acc(0);
    for (Index p = offsets[i]; p < offsets[i + 1]; ++p) acc += x(cols[p]);
    out(i) = scale * acc;
  }
}

template <typename Derived>
Vector<typename Derived::Scalar> spmv(const Graph& g, const Eigen::MatrixBase<Derived>& x,
                                      typename Derived::Scalar scale = typename Derived::Scalar(1)) {
  Vector<typename Derived::Scalar> out(g.node_count());
  spmv_into(g, x, scale, out);
  return out;
}

}  // namespace pgain
