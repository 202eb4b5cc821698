#ifndef SFTLAB_GROUP_ORACLE_HPP
#define SFTLAB_GROUP_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sftlab/ps_entropy.hpp"
#include "sftlab/symmetry.hpp"

namespace sftlab {

/// Permutation of {0..degree-1} as an image array.
using Perm = std::vector<uint8_t>;

Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& a);

/// Small permutation group, fully enumerated from generators.
/// Caps: degree <= 12, order <= 10^4.
class ExplicitGroup {
public:
  static constexpr int kMaxDegree = 12;
  static constexpr size_t kMaxOrder = 10000;

  ExplicitGroup(int degree, std::vector<Perm> generators,
                std::string tag = {});

  static ExplicitGroup alternating(int degree);
  static ExplicitGroup symmetric(int degree);
  /// Direct product acting on the disjoint union of the factors' domains.
  static ExplicitGroup product(const ExplicitGroup& a, const ExplicitGroup& b);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::string& tag() const { return tag_; }

  bool contains(const Perm& p) const;
  bool is_trivial() const { return elements_.size() == 1; }

private:
  int degree_;
  std::vector<Perm> elements_;  // sorted; index 0 is the identity
  std::string tag_;
};

/// All normal subgroups, each as a sorted element list. Exhaustive:
/// conjugacy-class normal closures, then closure under join.
std::vector<std::vector<Perm>> normal_subgroups(const ExplicitGroup& g);

bool is_simple(const ExplicitGroup& g);

/// Every normal subgroup of the direct product equals the sub-product over
/// the factors it projects onto nontrivially. Factors must be simple.
bool verify_smallisland(const std::vector<ExplicitGroup>& factors);

/// Alt(5)^r, r in {1,2}.
bool verify_smallisland(int r);

/// If H is simple, N normal in G, and H meets N nontrivially, then H <= N.
/// Returns the truth of the implication for this instance.
bool verify_pondlight(const ExplicitGroup& g, const std::vector<Perm>& n,
                      const ExplicitGroup& h);

struct KernelLemmaRow {
  long m;
  mpz_class group_order;  // |Simp_ev(Gamma^(m))|
  mpz_class p_m;
  bool hypothesis;   // |Simp_ev| > (p_m!)^{rD}
  bool conclusion;   // every element acts trivially on period-m points
  bool consistent;   // !(hypothesis && !conclusion)
};

struct KernelLemmaReport {
  std::vector<KernelLemmaRow> rows;
  bool all_consistent = true;
};

/// Instantiates Simp_ev(Gamma^(m)) acting on period-m points and tabulates
/// the order hypothesis against the trivial-action conclusion.
KernelLemmaReport verify_kernel_lemma_toy(const AdjacencyMatrix& a,
                                          const std::vector<long>& m_list,
                                          const PSParams& p);

}  // namespace sftlab

#endif
