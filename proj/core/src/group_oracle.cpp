#include "sftlab/group_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sftlab {

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<uint8_t>(i);
  return out;
}

namespace {

Perm perm_identity(int degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<Perm> generator_closure(int degree,
                                    const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::vector<Perm> frontier{perm_identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = perm_compose(g, p);
        if (seen.insert(q).second) {
          if (seen.size() > ExplicitGroup::kMaxOrder)
            throw TooLarge("group order exceeds 10^4");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

ExplicitGroup::ExplicitGroup(int degree, std::vector<Perm> generators,
                             std::string tag)
    : degree_(degree), tag_(std::move(tag)) {
  if (degree < 1 || degree > kMaxDegree)
    throw TooLarge("degree must be in [1, 12]");
  for (const Perm& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw InvalidInput("generator degree mismatch");
    Perm check = g;
    std::sort(check.begin(), check.end());
    if (check != perm_identity(degree))
      throw InvalidInput("generator is not a permutation");
  }
  elements_ = generator_closure(degree, generators);
}

ExplicitGroup ExplicitGroup::alternating(int degree) {
  std::vector<Perm> gens;
  if (degree >= 3) {
    Perm three = perm_identity(degree);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    gens.push_back(three);
    if (degree > 3) {
      Perm cyc = perm_identity(degree);
      int start = degree % 2 ? 0 : 1;  // odd-length cycle is even
      for (int i = start; i < degree; ++i)
        cyc[i] = static_cast<uint8_t>(i + 1 < degree ? i + 1 : start);
      gens.push_back(cyc);
    }
  }
  return ExplicitGroup(degree, gens, "Alt" + std::to_string(degree));
}

ExplicitGroup ExplicitGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    Perm swap = perm_identity(degree);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    if (degree > 2) {
      Perm cyc(degree);
      for (int i = 0; i < degree; ++i)
        cyc[i] = static_cast<uint8_t>((i + 1) % degree);
      gens.push_back(cyc);
    }
  }
  return ExplicitGroup(degree, gens, "Sym" + std::to_string(degree));
}

ExplicitGroup ExplicitGroup::product(const ExplicitGroup& a,
                                     const ExplicitGroup& b) {
  int degree = a.degree_ + b.degree_;
  if (a.order() * b.order() > kMaxOrder)
    throw TooLarge("product order exceeds 10^4");
  std::vector<Perm> gens;
  for (const Perm& p : a.elements_) {
    Perm q = perm_identity(degree);
    std::copy(p.begin(), p.end(), q.begin());
    gens.push_back(std::move(q));
  }
  for (const Perm& p : b.elements_) {
    Perm q = perm_identity(degree);
    for (int i = 0; i < b.degree_; ++i)
      q[a.degree_ + i] = static_cast<uint8_t>(a.degree_ + p[i]);
    gens.push_back(std::move(q));
  }
  return ExplicitGroup(degree, gens, a.tag_ + "x" + b.tag_);
}

bool ExplicitGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint8_t x : p) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

// Index view of a fully enumerated group; all closures run over element ids
// so the inner loops stay allocation-free.
struct GroupIndex {
  const std::vector<Perm>& els;
  std::unordered_map<Perm, int, PermHash> id_of;
  int identity_id;

  explicit GroupIndex(const ExplicitGroup& g) : els(g.elements()) {
    id_of.reserve(els.size() * 2);
    for (int i = 0; i < static_cast<int>(els.size()); ++i)
      id_of.emplace(els[i], i);
    identity_id = id_of.at(perm_identity(g.degree()));
  }

  int id(const Perm& p) const {
    auto it = id_of.find(p);
    if (it == id_of.end())
      throw InvalidInput("element outside the ambient group");
    return it->second;
  }

  // subgroup generated by the given ids, returned as sorted ids
  std::vector<int> closure(const std::vector<int>& gen_ids) const {
    std::vector<int> gens = gen_ids;
    for (int gi : gen_ids) gens.push_back(id(perm_inverse(els[gi])));
    std::vector<char> in(els.size(), 0);
    in[identity_id] = 1;
    std::vector<int> frontier{identity_id}, out{identity_id};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int f : frontier)
        for (int gi : gens) {
          int q = id(perm_compose(els[gi], els[f]));
          if (!in[q]) {
            in[q] = 1;
            next.push_back(q);
            out.push_back(q);
          }
        }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // greedy small generating set of a subgroup given as sorted ids
  std::vector<int> small_gens(const std::vector<int>& subgroup) const {
    std::vector<int> gens;
    std::vector<int> closed{identity_id};
    for (int idx : subgroup) {
      if (std::binary_search(closed.begin(), closed.end(), idx)) continue;
      gens.push_back(idx);
      closed = closure(gens);
      if (closed.size() == subgroup.size()) break;
    }
    return gens;
  }

  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<int> all(els.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> gens = small_gens(all);
    std::vector<int> gen_invs;
    for (int gi : gens) gen_invs.push_back(id(perm_inverse(els[gi])));
    std::vector<char> assigned(els.size(), 0);
    std::vector<std::vector<int>> classes;
    for (int p = 0; p < static_cast<int>(els.size()); ++p) {
      if (assigned[p]) continue;
      std::vector<int> cls{p}, frontier{p};
      assigned[p] = 1;
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int f : frontier)
          for (size_t i = 0; i < gens.size(); ++i) {
            Perm conj = perm_compose(perm_compose(els[gens[i]], els[f]),
                                     els[gen_invs[i]]);
            int q = id(conj);
            if (!assigned[q]) {
              assigned[q] = 1;
              cls.push_back(q);
              next.push_back(q);
            }
          }
        frontier = std::move(next);
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }
};

// subgroup generated by `seed` inside the ambient element set; sorted
std::vector<Perm> subgroup_closure(const ExplicitGroup& g,
                                   const std::vector<Perm>& seed) {
  GroupIndex ix(g);
  std::vector<int> ids;
  for (const Perm& p : seed) ids.push_back(ix.id(p));
  std::vector<Perm> out;
  for (int i : ix.closure(ids)) out.push_back(ix.els[i]);
  return out;
}

}  // namespace

std::vector<std::vector<Perm>> normal_subgroups(const ExplicitGroup& g) {
  if (g.order() > ExplicitGroup::kMaxOrder)
    throw TooLarge("group order exceeds 10^4");
  GroupIndex ix(g);
  std::set<std::vector<int>> found;
  found.insert({ix.identity_id});
  // normal closure of each conjugacy class, then close under join; joins use
  // small generating sets so each closure is cheap
  std::vector<std::pair<std::vector<int>, std::vector<int>>> subs;  // (els, gens)
  subs.emplace_back(std::vector<int>{ix.identity_id}, std::vector<int>{});
  for (const auto& cls : ix.conjugacy_classes()) {
    std::vector<int> sub = ix.closure(cls);
    if (found.insert(sub).second) {
      auto gens = ix.small_gens(sub);
      subs.emplace_back(std::move(sub), std::move(gens));
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < subs.size() && !grew; ++i)
      for (size_t j = i + 1; j < subs.size() && !grew; ++j) {
        std::vector<int> seed = subs[i].second;
        seed.insert(seed.end(), subs[j].second.begin(), subs[j].second.end());
        std::vector<int> join = ix.closure(seed);
        if (found.insert(join).second) {
          auto gens = ix.small_gens(join);
          subs.emplace_back(std::move(join), std::move(gens));
          grew = true;
        }
      }
  }
  std::vector<std::vector<Perm>> out;
  for (const auto& ids : found) {
    std::vector<Perm> sub;
    for (int i : ids) sub.push_back(ix.els[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

bool is_simple(const ExplicitGroup& g) {
  return normal_subgroups(g).size() == 2;
}

bool verify_smallisland(const std::vector<ExplicitGroup>& factors) {
  if (factors.empty()) throw InvalidInput("need at least one factor");
  for (const auto& f : factors)
    if (!is_simple(f)) throw NotSimple("factor " + f.tag() + " is not simple");
  ExplicitGroup g = factors[0];
  std::vector<int> offsets{0};
  for (size_t i = 1; i < factors.size(); ++i) {
    offsets.push_back(g.degree());
    g = ExplicitGroup::product(g, factors[i]);
  }

  auto moves_block = [&](const Perm& p, size_t i) {
    int lo = offsets[i];
    int hi = i + 1 < offsets.size() ? offsets[i + 1] : g.degree();
    for (int x = lo; x < hi; ++x)
      if (p[x] != x) return true;
    return false;
  };

  for (const auto& n : normal_subgroups(g)) {
    std::vector<size_t> support;
    for (size_t i = 0; i < factors.size(); ++i) {
      bool nontrivial = false;
      for (const Perm& p : n)
        if (moves_block(p, i)) nontrivial = true;
      if (nontrivial) support.push_back(i);
    }
    // sub-product over the support
    std::vector<Perm> seed;
    for (size_t i : support)
      for (const Perm& p : factors[i].elements()) {
        Perm q = perm_identity(g.degree());
        for (int x = 0; x < factors[i].degree(); ++x)
          q[offsets[i] + x] = static_cast<uint8_t>(offsets[i] + p[x]);
        seed.push_back(std::move(q));
      }
    std::vector<Perm> sub = subgroup_closure(g, seed);
    if (sub != n) return false;
  }
  return true;
}

bool verify_smallisland(int r) {
  if (r != 1 && r != 2) throw InvalidInput("r must be 1 or 2");
  std::vector<ExplicitGroup> factors(static_cast<size_t>(r),
                                     ExplicitGroup::alternating(5));
  return verify_smallisland(factors);
}

bool verify_pondlight(const ExplicitGroup& g, const std::vector<Perm>& n,
                      const ExplicitGroup& h) {
  std::set<Perm> nset(n.begin(), n.end());
  for (const Perm& p : n)
    if (!g.contains(p)) throw InvalidInput("N is not a subset of G");
  for (const Perm& x : g.elements())
    for (const Perm& p : n)
      if (!nset.count(perm_compose(perm_compose(x, p), perm_inverse(x))))
        throw NotNormal("N is not normal in G");
  if (h.degree() != g.degree() || !is_simple(h))
    throw NotSimple("H must be a simple subgroup of G");
  for (const Perm& p : h.elements())
    if (!g.contains(p)) throw InvalidInput("H is not a subgroup of G");

  bool meets = false;
  for (const Perm& p : h.elements())
    if (nset.count(p) && p != perm_identity(g.degree())) meets = true;
  if (!meets) return true;  // vacuous
  for (const Perm& p : h.elements())
    if (!nset.count(p)) return false;
  return true;
}

KernelLemmaReport verify_kernel_lemma_toy(const AdjacencyMatrix& a,
                                          const std::vector<long>& m_list,
                                          const PSParams& p) {
  require_primitive(a);
  SymmetryContext ctx(a);
  KernelLemmaReport rep;
  for (long m : m_list) {
    ProductOfAlternating g = simp_ev_group(a, m);
    mpz_class order = 1;
    for (const auto& d : g.degrees) {
      if (!d.fits_ulong_p()) throw TooLarge("degree too large for toy oracle");
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), mpz_get_ui(d.get_mpz_t()));
      order *= f / 2;
    }
    if (order > 10000) throw TooLarge("|Simp_ev| exceeds 10^4");

    KernelLemmaRow row{m, order, periodic_points(a, m), false, true, true};
    // hypothesis |Simp_ev| > (p_m!)^{rD}, compared in logs
    double lhs = order > 0 ? ln_mpz(order) : 0.0;
    row.hypothesis = order > 1 && lhs > p.r * p.D * lnfact(row.p_m);

    // enumerate the whole group as symmetries and act on period-m points
    std::vector<std::vector<std::vector<uint32_t>>> per_component;
    SimpleSymmetry id = ctx.identity(m);
    size_t total = 1;
    for (const auto& comp : id.components) {
      std::vector<std::vector<uint32_t>> evens;
      std::vector<uint32_t> perm(comp.size());
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        if (!permutation_parity(perm)) evens.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      total *= evens.size();
      if (total > 20000) throw TooLarge("group enumeration exceeds cap");
      per_component.push_back(std::move(evens));
    }
    std::vector<size_t> idx(per_component.size(), 0);
    size_t n_words = ctx.cyclic_words(m).size();
    std::vector<uint32_t> trivial(n_words);
    std::iota(trivial.begin(), trivial.end(), 0u);
    for (size_t count = 0; count < total; ++count) {
      SimpleSymmetry s = id;
      for (size_t c = 0; c < idx.size(); ++c)
        s.components[c] = per_component[c][idx[c]];
      if (ctx.restriction_to_periodic(s, m) != trivial) {
        row.conclusion = false;
        break;
      }
      for (size_t c = 0; c < idx.size(); ++c) {
        if (++idx[c] < per_component[c].size()) break;
        idx[c] = 0;
      }
    }
    row.consistent = !(row.hypothesis && !row.conclusion);
    rep.all_consistent = rep.all_consistent && row.consistent;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace sftlab
