#include "sftlab/graph.hpp"

namespace sftlab {

EdgeGraph EdgeGraph::from_matrix(const AdjacencyMatrix& a) {
  EdgeGraph g;
  int r = a.size();
  g.r_ = r;
  g.edge_sets_.resize(static_cast<size_t>(r) * r);
  g.out_.resize(r);
  int id = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const mpz_class& e = a.at(i, j);
      if (!e.fits_slong_p())
        throw TooLarge("matrix entry too large to materialize as edges");
      long count = mpz_get_si(e.get_mpz_t());
      for (long t = 0; t < count; ++t) {
        g.edges_.push_back({id, i, j});
        g.edge_sets_[i * r + j].push_back(id);
        g.out_[i].push_back(id);
        ++id;
      }
    }
  return g;
}

AdjacencyMatrix EdgeGraph::matrix() const {
  std::vector<mpz_class> e(static_cast<size_t>(r_) * r_, mpz_class(0));
  for (const auto& ed : edges_) e[ed.from * r_ + ed.to] += 1;
  return AdjacencyMatrix(r_, std::move(e));
}

std::vector<PathWord> enumerate_paths(const EdgeGraph& g, int i, int j,
                                      long m) {
  if (m < 1) throw InvalidInput("path length must be >= 1");
  if (i < 0 || j < 0 || i >= g.vertex_count() || j >= g.vertex_count())
    throw InvalidInput("vertex out of range");
  std::vector<PathWord> out;
  std::vector<int> cur;
  // out-edges are in increasing id order, so DFS emits lexicographic order
  auto dfs = [&](auto&& self, int v, long remaining) -> void {
    if (remaining == 0) {
      if (v == j) out.push_back({static_cast<int>(m), cur});
      return;
    }
    for (int e : g.out_edges(v)) {
      cur.push_back(e);
      self(self, g.edge(e).to, remaining - 1);
      cur.pop_back();
    }
  };
  dfs(dfs, i, m);
  return out;
}

PowerGraph::PowerGraph(const EdgeGraph& base, long m) : m_(m), base_(base) {
  if (m < 1) throw InvalidInput("power graph level must be >= 1");
  int r = base.vertex_count();
  std::vector<mpz_class> counts(static_cast<size_t>(r) * r, mpz_class(0));
  std::vector<std::vector<PathWord>> per_pair(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      per_pair[i * r + j] = enumerate_paths(base, i, j, m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      counts[i * r + j] = static_cast<long>(per_pair[i * r + j].size());
  graph_ = EdgeGraph::from_matrix(AdjacencyMatrix(r, std::move(counts)));
  paths_.resize(graph_.edge_count());
  int id = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (auto& p : per_pair[i * r + j]) {
        index_.emplace(p.edges, id);
        paths_[id] = std::move(p);
        ++id;
      }
}

int PowerGraph::edge_id(const std::vector<int>& path) const {
  auto it = index_.find(path);
  if (it == index_.end()) throw InvalidInput("path not present in power graph");
  return it->second;
}

int PowerGraph::local_index(const std::vector<int>& path) const {
  int id = edge_id(path);
  const Edge& e = graph_.edge(id);
  const auto& set = graph_.edge_set(e.from, e.to);
  // edge ids within a pair are contiguous
  return id - set.front();
}

}  // namespace sftlab
