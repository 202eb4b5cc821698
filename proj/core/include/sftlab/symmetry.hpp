#ifndef SFTLAB_SYMMETRY_HPP
#define SFTLAB_SYMMETRY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "sftlab/graph.hpp"

namespace sftlab {

/// An element of Simp(Gamma^(m)): one permutation per nonempty parallel-edge
/// set of the level-m power graph, stored as dense index arrays keyed to the
/// deterministic edge ordering.
struct SimpleSymmetry {
  long level = 1;
  AdjacencyMatrix base;                        // generating matrix of Gamma
  std::vector<std::vector<uint32_t>> components;  // indexed i*r+j

  bool same_context(const SimpleSymmetry& o) const {
    return level == o.level && base == o.base;
  }
  bool is_identity() const;
};

/// A closed path of period n in the base graph, marked at phase 0.
struct CyclicWord {
  long period;
  std::vector<int> edges;
};

/// Owns the base graph and caches power graphs per level; all symmetry
/// operations that need path bookkeeping go through here.
class SymmetryContext {
public:
  explicit SymmetryContext(const AdjacencyMatrix& base);

  const AdjacencyMatrix& base_matrix() const { return base_; }
  const EdgeGraph& base_graph() const { return graph_; }
  const PowerGraph& power(long m) const;

  SimpleSymmetry identity(long m) const;
  SimpleSymmetry random_symmetry(long m, std::mt19937_64& rng,
                                 bool force_even = false) const;

  SimpleSymmetry compose(const SimpleSymmetry& a,
                         const SimpleSymmetry& b) const;
  SimpleSymmetry invert(const SimpleSymmetry& a) const;

  /// Induced element of Simp(Gamma^(km)): each length-km path is mapped
  /// blockwise through a's components. Injective group homomorphism.
  SimpleSymmetry include(const SimpleSymmetry& a, long k) const;

  /// Blockwise action on a cyclic word whose period is divisible by the
  /// symmetry level; blocks are cut starting at the given phase.
  CyclicWord act_on_cyclic_word(const SimpleSymmetry& a, const CyclicWord& w,
                                long phase = 0) const;

  /// All period-n cyclic words at phase 0, lexicographic by edge ids.
  std::vector<CyclicWord> cyclic_words(long n) const;

  /// Permutation induced on the full set of period-n points, as an index
  /// array over cyclic_words(n).
  std::vector<uint32_t> restriction_to_periodic(const SimpleSymmetry& a,
                                                long n) const;

private:
  AdjacencyMatrix base_;
  EdgeGraph graph_;
  mutable std::map<long, std::unique_ptr<PowerGraph>> powers_;
};

bool is_even(const SimpleSymmetry& a);

/// is_even(include(a, k)) — always true when is_even(a); exposed so the
/// harness can assert it.
bool evenness_preserved_check(const SymmetryContext& ctx,
                              const SimpleSymmetry& a, long k);

int permutation_parity(const std::vector<uint32_t>& perm);  // 0 even, 1 odd

}  // namespace sftlab

#endif
