#ifndef SFTLAB_GRAPH_HPP
#define SFTLAB_GRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sftlab/matrix.hpp"

namespace sftlab {

struct Edge {
  int id;
  int from;
  int to;
};

/// Directed multigraph with dense deterministic edge ids: row-major over
/// vertex pairs, sequential within a pair. |E_{i,j}| equals the (i,j) entry
/// of the generating matrix.
class EdgeGraph {
public:
  static EdgeGraph from_matrix(const AdjacencyMatrix& a);

  int vertex_count() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Ordered edge-id list for the pair (i, j).
  const std::vector<int>& edge_set(int i, int j) const {
    return edge_sets_[i * r_ + j];
  }
  /// Out-edges of a vertex in increasing id order.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }

  AdjacencyMatrix matrix() const;

private:
  int r_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> edge_sets_;  // indexed i*r+j
  std::vector<std::vector<int>> out_;
};

/// A length-m path of composable edge ids in some base graph.
struct PathWord {
  int level;
  std::vector<int> edges;

  bool operator==(const PathWord& o) const {
    return level == o.level && edges == o.edges;
  }
};

/// All composable length-m edge sequences i -> j in lexicographic order by
/// constituent edge ids.
std::vector<PathWord> enumerate_paths(const EdgeGraph& g, int i, int j,
                                      long m);

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : v) h = (h ^ static_cast<size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

/// Power graph: vertices of the base graph, edges identified with length-m
/// paths. Keeps the path word behind every edge and an index for reverse
/// lookup, which the symmetry machinery relies on.
class PowerGraph {
public:
  PowerGraph(const EdgeGraph& base, long m);

  long level() const { return m_; }
  const EdgeGraph& base() const { return base_; }
  const EdgeGraph& graph() const { return graph_; }
  const PathWord& path_of(int edge_id) const { return paths_[edge_id]; }

  /// Position of a path within its pair's ordered edge set.
  int local_index(const std::vector<int>& path) const;
  /// Edge id of a path in the power graph.
  int edge_id(const std::vector<int>& path) const;

private:
  long m_;
  EdgeGraph base_;
  EdgeGraph graph_;
  std::vector<PathWord> paths_;                       // by power-edge id
  std::unordered_map<std::vector<int>, int, VecHash> index_;  // path -> id
};

}  // namespace sftlab

#endif
