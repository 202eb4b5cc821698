#ifndef SFTLAB_SOFIC_HPP
#define SFTLAB_SOFIC_HPP

#include <map>
#include <string>
#include <vector>

#include "sftlab/graph.hpp"
#include "sftlab/ps_entropy.hpp"

namespace sftlab {

/// Edge-labeled presentation of a sofic shift.
struct LabeledGraph {
  EdgeGraph graph;
  std::vector<std::string> labels;  // by edge id

  static LabeledGraph even_shift();
  /// Edge graph of `a` with all labels distinct (an SFT in disguise).
  static LabeledGraph distinct_labels(const AdjacencyMatrix& a);

  std::vector<std::string> alphabet() const;  // sorted, deduplicated
};

/// No vertex has two out-edges with equal labels.
bool is_right_resolving(const LabeledGraph& g);

/// Level-j presentation: edges are length-j paths, labels are concatenated
/// symbol strings. Right-resolving is preserved.
LabeledGraph power_labeled(const LabeledGraph& g, long j);

/// Standard in-splitting along a partition of each vertex's incoming edges.
/// partition[v] lists the classes; each in-edge of v appears exactly once.
LabeledGraph in_split(const LabeledGraph& g,
                      const std::vector<std::vector<std::vector<int>>>& partition);

/// Least L with min entry of A^L >= threshold (default 3r).
long find_power_with_min_entry(const LabeledGraph& g, long threshold = -1);

struct TowerLevel {
  long j;
  mpq_class b;                             // (1/r) min entries of A^j
  std::vector<std::vector<int>> selected;  // per vertex pair i*r+q: path ids
  long seed_size = 0;                      // edges inherited from divisors
  std::vector<long> collisions;            // per pair: candidates skipped
  mpz_class collision_bound;               // r/(r^3-1) * min entries of A^j
};

struct SubgraphTower {
  LabeledGraph base;
  std::map<long, TowerLevel> levels;
};

/// Greedy deterministic construction of label-injective spanning subgraphs
/// G^(1)..G^(J_max) of the power graphs, compatible along divisors:
///   (1) each vertex pair carries exactly floor(b_j) edges,
///   (2) for d | j every length-(j/d) path through G^(d) is an edge of G^(j),
///   (3) the level-j labeling is injective on E(G^(j)).
/// All three conditions are re-verified exhaustively after construction.
SubgraphTower build_subgraph_tower(const LabeledGraph& g, long j_max);

/// Exhaustive post-hoc check of the three tower conditions; throws on
/// violation, returns the number of (level, divisor) pairs checked.
long verify_subgraph_tower(const SubgraphTower& t);

/// a_j = (1/j) ln ln prod_{p,q} max(1, floor(b_j)!/2). With j_list given the
/// b_j come straight from exact matrix powers, no construction needed.
GrowthSeries sofic_growth_series(const SubgraphTower& t,
                                 const std::vector<long>& j_list = {});

constexpr long kTowerLevelCap = 64;

}  // namespace sftlab

#endif
