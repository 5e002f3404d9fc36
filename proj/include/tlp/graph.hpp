#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlp {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted set of node indices relative to a parent Graph.
struct NodeSet {
  std::vector<int> members;  // strictly increasing

  bool contains(int v) const;
  std::size_t size() const { return members.size(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
};

/// Immutable weighted graph with stable external node labels.
///
/// Node labels are opaque strings mapped to dense indices 0..n-1 in
/// first-appearance order. No self-loops, no duplicate edges, all
/// weights strictly positive. Undirected edges are stored once with
/// src < dst.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> labels, bool directed, std::vector<Edge> edges,
        bool weighted = false);

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  std::optional<int> index_of(const std::string& label) const;

  /// Edges sorted by (src, dst).
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  /// Out-adjacency (both directions when undirected).
  const std::vector<std::pair<int, double>>& out_neighbors(int v) const {
    return out_.at(v);
  }
  /// Adjacency ignoring edge direction; used for ball expansion.
  const std::vector<std::pair<int, double>>& undirected_neighbors(int v) const {
    return und_.at(v);
  }

  double max_edge_weight() const;  // 1 when the graph has no edges
  double mean_edge_weight() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.directed_ == b.directed_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> out_;
  std::vector<std::vector<std::pair<int, double>>> und_;
};

/// Dense matrix of pairwise shortest-path distances. Unreachable pairs
/// hold the sentinel M; the diagonal is zero.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, double sentinel_m);

  int size() const { return n_; }
  double sentinel_m() const { return m_; }

  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

  double max_entry() const;
  bool is_symmetric() const;

 private:
  int n_ = 0;
  double m_ = 0.0;
  std::vector<double> data_;
};

struct EdgeListStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Parses a whitespace-separated edge list ("src dst" or "src dst weight",
/// comments start with '#' or '%'). Throws std::runtime_error with a line
/// number on malformed input.
Graph load_edge_list(std::istream& in, bool directed, bool weighted,
                     EdgeListStats* stats = nullptr);

/// u plus every node within k hops of u, ignoring edge direction.
NodeSet khop_neighborhood(const Graph& g, int u, int k);

/// Union of the k-hop balls of u and v. Requires u != v.
NodeSet combined_neighborhood(const Graph& g, int u, int v, int k);

/// Subgraph on s with exactly the edges of g internal to s. Indices are
/// re-densified; parent_of_local (when given) receives local -> parent.
Graph induce(const Graph& g, const NodeSet& s,
             std::vector<int>* parent_of_local = nullptr);

/// Copy of g with edge (u,v) forced present or absent. Added edges get
/// weight 1 on unweighted graphs, the mean edge weight otherwise.
Graph toggle_edge(const Graph& g, int u, int v, bool present);

/// Undirected unit-weight complete graph over the nodes of s.
Graph complete_graph(const Graph& g, const NodeSet& s);

/// All-pairs shortest paths; OpenMP-parallel over source nodes.
/// Sentinel M = n * w_max. BFS when all weights are 1, Dijkstra otherwise.
DistanceMatrix apsp(const Graph& g);

/// Serial reference implementation with identical contract to apsp().
DistanceMatrix apsp_serial(const Graph& g);

}  // namespace tlp
