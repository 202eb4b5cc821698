#include "sftlab/properties.hpp"

#include <memory>

namespace sftlab {

namespace {

bool components_equal(const SimpleSymmetry& a, const SimpleSymmetry& b) {
  return a.level == b.level && a.components == b.components;
}

}  // namespace

PropertyReport run_symmetry_properties(uint64_t seed, long cases,
                                       long edge_cap) {
  std::vector<AdjacencyMatrix> corpus{
      AdjacencyMatrix::golden_mean(),
      AdjacencyMatrix::full_shift(2),
      AdjacencyMatrix::full_shift(3),
      AdjacencyMatrix::from_rows({{1, 2}, {1, 1}}),
      AdjacencyMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
  };
  std::vector<std::unique_ptr<SymmetryContext>> contexts;
  for (const auto& a : corpus)
    contexts.push_back(std::make_unique<SymmetryContext>(a));

  std::mt19937_64 rng(seed);
  PropertyReport rep{seed, 0, 0, 0, 0};
  std::uniform_int_distribution<size_t> pick_base(0, corpus.size() - 1);
  std::uniform_int_distribution<long> pick_m(1, 4), pick_k(2, 4);

  for (long c = 0; c < cases; ++c) {
    size_t b = pick_base(rng);
    long m = pick_m(rng), k = pick_k(rng);
    // keep the target power graph small enough for an exhaustive check
    for (int tries = 0; tries < 64; ++tries) {
      mpz_class edges = 0;
      AdjacencyMatrix akm = matrix_power(corpus[b], k * m);
      for (const auto& e : akm.entries()) edges += e;
      if (edges <= edge_cap) break;
      b = pick_base(rng);
      m = pick_m(rng);
      k = pick_k(rng);
    }
    const SymmetryContext& ctx = *contexts[b];

    SimpleSymmetry sa = ctx.random_symmetry(m, rng, true);
    SimpleSymmetry sb = ctx.random_symmetry(m, rng, true);
    SimpleSymmetry lhs = ctx.include(ctx.compose(sa, sb), k);
    SimpleSymmetry rhs = ctx.compose(ctx.include(sa, k), ctx.include(sb, k));
    if (!components_equal(lhs, rhs)) ++rep.homomorphism_violations;
    if (!is_even(ctx.include(sa, k))) ++rep.evenness_violations;
    if (!ctx.include(ctx.identity(m), k).is_identity())
      ++rep.identity_violations;
    ++rep.cases;
  }
  return rep;
}

}  // namespace sftlab
