#include "sftlab/sofic.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sftlab {

LabeledGraph LabeledGraph::even_shift() {
  // v0 --0--> v0, v0 --1--> v1, v1 --1--> v0
  AdjacencyMatrix a = AdjacencyMatrix::from_rows({{1, 1}, {1, 0}});
  LabeledGraph g{EdgeGraph::from_matrix(a), {"0", "1", "1"}};
  return g;
}

LabeledGraph LabeledGraph::distinct_labels(const AdjacencyMatrix& a) {
  EdgeGraph eg = EdgeGraph::from_matrix(a);
  LabeledGraph g{eg, {}};
  for (int e = 0; e < eg.edge_count(); ++e)
    g.labels.push_back("e" + std::to_string(e));
  return g;
}

std::vector<std::string> LabeledGraph::alphabet() const {
  std::set<std::string> s(labels.begin(), labels.end());
  return {s.begin(), s.end()};
}

bool is_right_resolving(const LabeledGraph& g) {
  if (static_cast<int>(g.labels.size()) != g.graph.edge_count())
    throw InvalidInput("every edge needs a label");
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    std::set<std::string> seen;
    for (int e : g.graph.out_edges(v))
      if (!seen.insert(g.labels[e]).second) return false;
  }
  return true;
}

namespace {

// concatenation that cannot collide across different block boundaries
std::string join_labels(const LabeledGraph& g, const std::vector<int>& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += g.labels[path[i]];
  }
  return out;
}

}  // namespace

LabeledGraph power_labeled(const LabeledGraph& g, long j) {
  if (j < 1) throw InvalidInput("power level must be >= 1");
  PowerGraph pg(g.graph, j);
  LabeledGraph out{pg.graph(), {}};
  for (int e = 0; e < pg.graph().edge_count(); ++e)
    out.labels.push_back(join_labels(g, pg.path_of(e).edges));
  return out;
}

LabeledGraph in_split(
    const LabeledGraph& g,
    const std::vector<std::vector<std::vector<int>>>& partition) {
  int r = g.graph.vertex_count();
  if (static_cast<int>(partition.size()) != r)
    throw InvalidPartition("one partition per vertex required");

  // validate: classes nonempty, disjoint, and covering the in-edges
  std::vector<int> cls_of(g.graph.edge_count(), -1);
  std::vector<int> first_class(r, 0), n_classes(r, 0);
  int total_classes = 0;
  for (int v = 0; v < r; ++v) {
    first_class[v] = total_classes;
    n_classes[v] = static_cast<int>(partition[v].size());
    std::set<int> covered;
    for (int c = 0; c < n_classes[v]; ++c) {
      if (partition[v][c].empty())
        throw InvalidPartition("empty partition class");
      for (int e : partition[v][c]) {
        if (e < 0 || e >= g.graph.edge_count() || g.graph.edge(e).to != v)
          throw InvalidPartition("edge not incoming to its vertex");
        if (!covered.insert(e).second)
          throw InvalidPartition("edge in two classes");
        cls_of[e] = total_classes + c;
      }
    }
    size_t in_degree = 0;
    for (const Edge& e : g.graph.edges())
      if (e.to == v) ++in_degree;
    if (covered.size() != in_degree)
      throw InvalidPartition("partition does not cover the in-edges");
    total_classes += n_classes[v];
  }

  // split vertex (v, c); edge e: u->v in class c gets one copy per class
  // of u, keeping its label
  std::vector<mpz_class> entries(static_cast<size_t>(total_classes) *
                                     total_classes,
                                 0);
  struct NewEdge {
    int from, to;
    std::string label;
  };
  std::vector<NewEdge> new_edges;
  for (const Edge& e : g.graph.edges()) {
    int to = cls_of[e.id];
    for (int d = 0; d < n_classes[e.from]; ++d)
      new_edges.push_back({first_class[e.from] + d, to, g.labels[e.id]});
  }
  for (const NewEdge& ne : new_edges)
    entries[ne.from * total_classes + ne.to] += 1;
  AdjacencyMatrix am(total_classes, entries);
  EdgeGraph eg = EdgeGraph::from_matrix(am);

  // labels must follow the deterministic id order of EdgeGraph
  std::stable_sort(new_edges.begin(), new_edges.end(),
                   [&](const NewEdge& x, const NewEdge& y) {
                     if (x.from != y.from) return x.from < y.from;
                     return x.to < y.to;
                   });
  LabeledGraph out{eg, {}};
  for (const NewEdge& ne : new_edges) out.labels.push_back(ne.label);
  return out;
}

long find_power_with_min_entry(const LabeledGraph& g, long threshold) {
  AdjacencyMatrix a = g.graph.matrix();
  require_primitive(a);
  if (threshold < 0) threshold = 3L * a.size();
  AdjacencyMatrix p = a;
  for (long l = 1; l <= 10000; ++l) {
    if (p.min_entry() >= threshold) return l;
    p = matrix_multiply(p, a);
  }
  throw TooLarge("no power below the cap reaches the threshold");
}

namespace {

// all length-len compositions of selected level-d edges starting anywhere,
// flattened to base-edge paths
void inherited_paths(const EdgeGraph& power_d_graph, const PowerGraph& pd,
                     const std::vector<std::vector<int>>& selected, long len,
                     std::vector<std::vector<int>>& out) {
  int r = power_d_graph.vertex_count();
  std::vector<int> cur;
  std::vector<int> flat;
  auto dfs = [&](auto&& self, int v, long remaining) -> void {
    if (remaining == 0) {
      flat.clear();
      for (int id : cur) {
        const auto& p = pd.path_of(id).edges;
        flat.insert(flat.end(), p.begin(), p.end());
      }
      out.push_back(flat);
      return;
    }
    for (int q = 0; q < r; ++q)
      for (int id : selected[v * r + q]) {
        cur.push_back(id);
        self(self, q, remaining - 1);
        cur.pop_back();
      }
  };
  for (int v = 0; v < r; ++v) dfs(dfs, v, len);
}

}  // namespace

SubgraphTower build_subgraph_tower(const LabeledGraph& g, long j_max) {
  if (j_max < 1 || j_max > kTowerLevelCap)
    throw InvalidInput("j_max must be in [1, 64]");
  if (!is_right_resolving(g))
    throw InvalidInput("base presentation must be right-resolving");
  AdjacencyMatrix a = g.graph.matrix();
  require_primitive(a);
  int r = a.size();
  if (r < 2) throw InvalidInput("construction needs r >= 2");
  if (a.min_entry() < 3 * r)
    throw PreconditionEntry("min entry of the base matrix must be >= 3r");

  SubgraphTower tower{g, {}};
  for (long j = 1; j <= j_max; ++j) {
    AdjacencyMatrix aj = matrix_power(a, j);
    PowerGraph pj(g.graph, j);
    TowerLevel level{j, mpq_class(aj.min_entry(), r), {}, 0, {}, 0};
    level.b.canonicalize();
    mpz_class floor_b = level.b.get_num() / level.b.get_den();
    if (!floor_b.fits_slong_p()) throw TooLarge("floor(b_j) out of range");
    long target = mpz_get_si(floor_b.get_mpz_t());
    level.collision_bound = r * aj.min_entry() / (r * r * r - 1);
    level.selected.assign(static_cast<size_t>(r) * r, {});
    level.collisions.assign(static_cast<size_t>(r) * r, 0);

    // seed with the images of all proper divisor levels
    std::set<int> seed_ids;
    for (long d = 1; d < j; ++d) {
      if (j % d) continue;
      const TowerLevel& ld = tower.levels.at(d);
      PowerGraph pd(g.graph, d);
      std::vector<std::vector<int>> paths;
      inherited_paths(pd.graph(), pd, ld.selected, j / d, paths);
      for (const auto& p : paths) seed_ids.insert(pj.edge_id(p));
    }
    level.seed_size = static_cast<long>(seed_ids.size());

    std::unordered_set<std::string> used_labels;
    for (int id : seed_ids) {
      std::string lab = join_labels(g, pj.path_of(id).edges);
      if (!used_labels.insert(lab).second)
        throw SeedCollision("divisor images collide in label " + lab +
                            " at level " + std::to_string(j));
      const Edge& e = pj.graph().edge(id);
      level.selected[e.from * r + e.to].push_back(id);
    }

    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q) {
        auto& sel = level.selected[p * r + q];
        if (static_cast<long>(sel.size()) > target)
          throw ExtensionExhausted("seed already exceeds floor(b_j) at pair " +
                                   std::to_string(p) + "," +
                                   std::to_string(q));
        for (int id : pj.graph().edge_set(p, q)) {
          if (static_cast<long>(sel.size()) == target) break;
          if (seed_ids.count(id)) continue;
          std::string lab = join_labels(g, pj.path_of(id).edges);
          if (used_labels.count(lab)) {
            ++level.collisions[p * r + q];
            continue;
          }
          used_labels.insert(lab);
          sel.push_back(id);
        }
        if (static_cast<long>(sel.size()) < target)
          throw ExtensionExhausted(
              "pair " + std::to_string(p) + "," + std::to_string(q) +
              " at level " + std::to_string(j) + " reached only " +
              std::to_string(sel.size()) + " of " + std::to_string(target) +
              " edges after " +
              std::to_string(level.collisions[p * r + q]) +
              " collisions (bound " + level.collision_bound.get_str() + ")");
        std::sort(sel.begin(), sel.end());
      }
    tower.levels.emplace(j, std::move(level));
  }
  verify_subgraph_tower(tower);
  return tower;
}

long verify_subgraph_tower(const SubgraphTower& t) {
  AdjacencyMatrix a = t.base.graph.matrix();
  int r = a.size();
  long checked = 0;
  for (const auto& [j, level] : t.levels) {
    AdjacencyMatrix aj = matrix_power(a, j);
    PowerGraph pj(t.base.graph, j);
    mpq_class b(aj.min_entry(), r);
    b.canonicalize();
    if (b != level.b) throw Error("internal", "stored b_j mismatch");
    mpz_class floor_b = b.get_num() / b.get_den();

    // (1) exact pair counts
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        if (level.selected[p * r + q].size() != floor_b)
          throw Error("tower-condition-1",
                      "pair count != floor(b_j) at level " +
                          std::to_string(j));

    // (3) injective labeling across the whole level
    std::unordered_set<std::string> labels;
    for (const auto& sel : level.selected)
      for (int id : sel)
        if (!labels.insert(join_labels(t.base, pj.path_of(id).edges)).second)
          throw Error("tower-condition-3",
                      "label collision at level " + std::to_string(j));

    // (2) every path through G^(d) is an edge of G^(j), for every d | j
    for (const auto& [d, ld] : t.levels) {
      if (d >= j || j % d) continue;
      PowerGraph pd(t.base.graph, d);
      std::vector<std::vector<int>> paths;
      inherited_paths(pd.graph(), pd, ld.selected, j / d, paths);
      for (const auto& p : paths) {
        int id = pj.edge_id(p);
        const Edge& e = pj.graph().edge(id);
        const auto& sel = level.selected[e.from * r + e.to];
        if (!std::binary_search(sel.begin(), sel.end(), id))
          throw Error("tower-condition-2",
                      "divisor " + std::to_string(d) +
                          " image missing at level " + std::to_string(j));
      }
      ++checked;
    }
    ++checked;
  }
  return checked;
}

GrowthSeries sofic_growth_series(const SubgraphTower& t,
                                 const std::vector<long>& j_list) {
  AdjacencyMatrix a = t.base.graph.matrix();
  require_primitive(a);
  int r = a.size();
  Enclosure h = topological_entropy(a);
  GrowthSeries s{a, 1, {}, h.lo, h.hi};
  std::vector<long> js = j_list;
  if (js.empty())
    for (const auto& [j, level] : t.levels) js.push_back(j);
  for (long j : js) {
    mpz_class floor_b = matrix_power(a, j).min_entry() / r;
    std::vector<mpz_class> degrees(static_cast<size_t>(r) * r, floor_b);
    GrowthSample sample{j, 0.0, log_alt_order(degrees), true};
    sample.a_n = sample.order.loglog() / static_cast<double>(j);
    s.samples.push_back(std::move(sample));
  }
  std::sort(s.samples.begin(), s.samples.end(),
            [](const GrowthSample& x, const GrowthSample& y) {
              return x.n < y.n;
            });
  return s;
}

}  // namespace sftlab
