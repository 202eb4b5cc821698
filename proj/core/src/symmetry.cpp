#include "sftlab/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace sftlab {

bool SimpleSymmetry::is_identity() const {
  for (const auto& comp : components)
    for (uint32_t i = 0; i < comp.size(); ++i)
      if (comp[i] != i) return false;
  return true;
}

int permutation_parity(const std::vector<uint32_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int parity = 0;
  for (uint32_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    uint32_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity;
}

bool is_even(const SimpleSymmetry& a) {
  for (const auto& comp : a.components)
    if (permutation_parity(comp)) return false;
  return true;
}

SymmetryContext::SymmetryContext(const AdjacencyMatrix& base)
    : base_(base), graph_(EdgeGraph::from_matrix(base)) {}

const PowerGraph& SymmetryContext::power(long m) const {
  auto it = powers_.find(m);
  if (it == powers_.end())
    it = powers_.emplace(m, std::make_unique<PowerGraph>(graph_, m)).first;
  return *it->second;
}

SimpleSymmetry SymmetryContext::identity(long m) const {
  const PowerGraph& pg = power(m);
  int r = base_.size();
  SimpleSymmetry s{m, base_, {}};
  s.components.resize(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto& comp = s.components[i * r + j];
      comp.resize(pg.graph().edge_set(i, j).size());
      std::iota(comp.begin(), comp.end(), 0u);
    }
  return s;
}

SimpleSymmetry SymmetryContext::random_symmetry(long m, std::mt19937_64& rng,
                                                bool force_even) const {
  SimpleSymmetry s = identity(m);
  for (auto& comp : s.components) {
    std::shuffle(comp.begin(), comp.end(), rng);
    if (force_even && permutation_parity(comp))
      std::swap(comp[0], comp[1]);  // size >= 2 whenever parity can be odd
  }
  return s;
}

SimpleSymmetry SymmetryContext::compose(const SimpleSymmetry& a,
                                        const SimpleSymmetry& b) const {
  if (!a.same_context(b))
    throw LevelMismatch("compose needs matching level and base matrix");
  SimpleSymmetry out = a;
  for (size_t p = 0; p < a.components.size(); ++p) {
    const auto& pa = a.components[p];
    const auto& pb = b.components[p];
    auto& po = out.components[p];
    for (size_t i = 0; i < pa.size(); ++i) po[i] = pa[pb[i]];  // a after b
  }
  return out;
}

SimpleSymmetry SymmetryContext::invert(const SimpleSymmetry& a) const {
  SimpleSymmetry out = a;
  for (size_t p = 0; p < a.components.size(); ++p) {
    const auto& pa = a.components[p];
    auto& po = out.components[p];
    for (uint32_t i = 0; i < pa.size(); ++i) po[pa[i]] = i;
  }
  return out;
}

SimpleSymmetry SymmetryContext::include(const SimpleSymmetry& a,
                                        long k) const {
  if (k < 1) throw InvalidInput("inclusion needs k >= 1");
  long m = a.level;
  const PowerGraph& pm = power(m);
  const PowerGraph& pkm = power(k * m);
  int r = base_.size();
  SimpleSymmetry out = identity(k * m);
  std::vector<int> block(m), image;
  for (int id = 0; id < pkm.graph().edge_count(); ++id) {
    const PathWord& path = pkm.path_of(id);
    image.clear();
    for (long t = 0; t < k; ++t) {
      block.assign(path.edges.begin() + t * m,
                   path.edges.begin() + (t + 1) * m);
      int bid = pm.edge_id(block);
      const Edge& be = pm.graph().edge(bid);
      const auto& set = pm.graph().edge_set(be.from, be.to);
      uint32_t local = static_cast<uint32_t>(bid - set.front());
      uint32_t mapped = a.components[be.from * r + be.to][local];
      const PathWord& img = pm.path_of(set.front() + mapped);
      image.insert(image.end(), img.edges.begin(), img.edges.end());
    }
    int iid = pkm.edge_id(image);
    const Edge& e = pkm.graph().edge(id);
    const auto& pair_set = pkm.graph().edge_set(e.from, e.to);
    out.components[e.from * r + e.to][id - pair_set.front()] =
        static_cast<uint32_t>(iid - pair_set.front());
  }
  return out;
}

bool evenness_preserved_check(const SymmetryContext& ctx,
                              const SimpleSymmetry& a, long k) {
  return is_even(ctx.include(a, k));
}

CyclicWord SymmetryContext::act_on_cyclic_word(const SimpleSymmetry& a,
                                               const CyclicWord& w,
                                               long phase) const {
  long m = a.level, n = w.period;
  if (n % m != 0)
    throw PeriodNotDivisible("symmetry level must divide word period");
  const PowerGraph& pm = power(m);
  int r = base_.size();
  CyclicWord out = w;
  std::vector<int> block(m);
  for (long t = 0; t < n / m; ++t) {
    for (long s = 0; s < m; ++s) block[s] = w.edges[(phase + t * m + s) % n];
    int bid = pm.edge_id(block);
    const Edge& be = pm.graph().edge(bid);
    const auto& set = pm.graph().edge_set(be.from, be.to);
    uint32_t local = static_cast<uint32_t>(bid - set.front());
    uint32_t mapped = a.components[be.from * r + be.to][local];
    const PathWord& img = pm.path_of(set.front() + mapped);
    for (long s = 0; s < m; ++s)
      out.edges[(phase + t * m + s) % n] = img.edges[s];
  }
  return out;
}

std::vector<CyclicWord> SymmetryContext::cyclic_words(long n) const {
  if (n < 1) throw InvalidInput("period must be >= 1");
  std::vector<CyclicWord> out;
  std::vector<int> cur;
  // start-vertex order plus DFS gives global lexicographic order, since edge
  // ids are grouped by source vertex
  auto dfs = [&](auto&& self, int start, int v, long remaining) -> void {
    if (remaining == 0) {
      if (v == start) out.push_back({n, cur});
      return;
    }
    for (int e : graph_.out_edges(v)) {
      cur.push_back(e);
      self(self, start, graph_.edge(e).to, remaining - 1);
      cur.pop_back();
    }
  };
  for (int start = 0; start < base_.size(); ++start) dfs(dfs, start, start, n);
  return out;
}

std::vector<uint32_t> SymmetryContext::restriction_to_periodic(
    const SimpleSymmetry& a, long n) const {
  if (n % a.level != 0)
    throw PeriodNotDivisible("symmetry level must divide period");
  auto words = cyclic_words(n);
  std::unordered_map<std::vector<int>, uint32_t, VecHash> index;
  for (uint32_t i = 0; i < words.size(); ++i) index.emplace(words[i].edges, i);
  std::vector<uint32_t> perm(words.size());
  for (uint32_t i = 0; i < words.size(); ++i) {
    CyclicWord img = act_on_cyclic_word(a, words[i], 0);
    perm[i] = index.at(img.edges);
  }
  return perm;
}

}  // namespace sftlab
