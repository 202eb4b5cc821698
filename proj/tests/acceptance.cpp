// Acceptance gate: one line per criterion, pass/fail, with wall time.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "sftlab/classify.hpp"
#include "sftlab/group_oracle.hpp"
#include "sftlab/properties.hpp"
#include "sftlab/sofic.hpp"

using namespace sftlab;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kLn2 = std::log(2.0);

int g_failures = 0;

void criterion(int id, const char* desc, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  std::printf("[%2d] %s  %-68s %6.2fs%s\n", id, ok ? "PASS" : "FAIL", desc,
              secs, note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double full2_reference(long n) {
  double ln_order = std::lgamma(std::pow(2.0, n) + 1.0) - kLn2;
  return std::log(ln_order) / static_cast<double>(n);
}

}  // namespace

int main() {
  criterion(1, "certified spectral radius: golden mean and full shifts", [] {
    PerronData g = perron_eigendata(AdjacencyMatrix::golden_mean());
    if (!(g.lambda_lo <= kPhi && kPhi <= g.lambda_hi)) return false;
    if (g.lambda_hi - g.lambda_lo > 1e-9) return false;
    for (long n = 2; n <= 10; ++n) {
      PerronData e = perron_eigendata(AdjacencyMatrix::full_shift(n));
      if (!(e.lambda_lo <= n && n <= e.lambda_hi)) return false;
      if (e.lambda_hi - e.lambda_lo > 1e-9) return false;
    }
    return true;
  });

  criterion(2, "full 2-shift growth vs independent Stirling reference", [] {
    std::vector<long> ns;
    for (long n = 2; n <= 64; ++n) ns.push_back(n);
    ns.push_back(512);
    GrowthSeries s = growth_series(AdjacencyMatrix::full_shift(2), 1, ns);
    for (const auto& sm : s.samples) {
      if (sm.n <= 64) {
        double ref = full2_reference(sm.n);
        if (std::abs(sm.a_n - ref) / std::abs(ref) > 1e-9) return false;
      } else if (std::abs(sm.a_n - kLn2) > 0.02) {
        return false;
      }
    }
    return s.samples.size() == ns.size();
  });

  criterion(3, "golden mean growth to n=200, decreasing residuals", [] {
    GrowthSeries s = growth_series(AdjacencyMatrix::golden_mean(), 1,
                                   {25, 50, 100, 200});
    double target = std::log(kPhi);
    for (const auto& sm : s.samples)
      if (!sm.exact) return false;
    if (std::abs(s.samples[3].a_n - target) > 0.05) return false;
    for (size_t i = 1; i < s.samples.size(); ++i)
      if (std::abs(s.samples[i].a_n - target) >=
          std::abs(s.samples[i - 1].a_n - target))
        return false;
    return true;
  });

  criterion(4, "admissible (C,D,r) for the golden mean, verified to 200", [] {
    AdmissibleResult res =
        admissible_params(AdjacencyMatrix::golden_mean(), 0.05, 200);
    if (res.params.C > 0.382 * 0.95 + 1e-9) return false;
    if (res.params.D < 2.618 * 1.05 - 1e-9) return false;
    if (res.params.r != 4) return false;
    for (long k = res.K; k <= 200; ++k)
      if (!is_ps_member(simp_ev_group(AdjacencyMatrix::golden_mean(), k),
                        res.params))
        return false;
    return true;
  });

  criterion(5, "order upper bounds (i) and (ii) beyond a threshold <= 30", [] {
    std::vector<long> ns;
    for (long n = 1; n <= 40; ++n) ns.push_back(n);
    AdmissibleResult adm =
        admissible_params(AdjacencyMatrix::golden_mean(), 0.05, 200);
    UpperBoundReport g =
        upper_bound_check(AdjacencyMatrix::golden_mean(), ns, adm.params);
    if (g.first_n_ii < 0 || g.first_n_ii > 30) return false;
    if (!g.violations_after_ii.empty()) return false;
    if (g.first_n_i < 0 || g.first_n_i > g.first_n_ii) return false;
    if (!g.violations_after_i.empty()) return false;
    UpperBoundReport f = upper_bound_check(AdjacencyMatrix::full_shift(2), ns,
                                           PSParams(1, 1, 1));
    return f.first_n_ii >= 1 && f.first_n_ii <= 30 &&
           f.violations_after_ii.empty() && f.violations_after_i.empty();
  });

  criterion(6, "1000 random cases: inclusion homomorphism, parity kept", [] {
    PropertyReport rep = run_symmetry_properties(20260824, 1000);
    return rep.cases == 1000 && rep.clean();
  });

  criterion(7, "periodic points: trace formula vs brute enumeration", [] {
    std::vector<AdjacencyMatrix> corpus{
        AdjacencyMatrix::golden_mean(),
        AdjacencyMatrix::full_shift(2),
        AdjacencyMatrix::full_shift(3),
        AdjacencyMatrix::from_rows({{1, 2}, {1, 1}}),
        AdjacencyMatrix::from_rows({{2, 1}, {1, 1}}),
        AdjacencyMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
    };
    for (const auto& a : corpus)
      for (long n = 1; n <= 10; ++n)
        if (periodic_points(a, n, true) != periodic_points(a, n, false))
          return false;
    return true;
  });

  criterion(8, "full shift classification table with exact witnesses", [] {
    using V = ClassificationVerdict::Verdict;
    if (fullshift_isomorphic(2, 3).verdict != V::NotIsomorphic) return false;
    auto v24 = fullshift_isomorphic(2, 4);
    if (v24.verdict != V::Isomorphic ||
        v24.witness != std::pair<long, long>{2, 1})
      return false;
    auto v832 = fullshift_isomorphic(8, 32);
    if (v832.verdict != V::Isomorphic ||
        v832.witness != std::pair<long, long>{5, 3})
      return false;
    if (fullshift_isomorphic(6, 12).verdict != V::NotIsomorphic) return false;
    for (long m = 2; m <= 10; ++m) {
      long mt = 1;
      for (long t = 1; t <= 5; ++t) {
        mt *= m;
        auto v = fullshift_isomorphic(m, mt);
        if (v.verdict != V::Isomorphic ||
            v.witness != std::pair<long, long>{t, 1})
          return false;
      }
    }
    return true;
  });

  criterion(9, "root exponent bounds and feasibility vs exact arithmetic", [] {
    RootBound b41 = root_exponent_bound_fullshift(4, 1);
    if (b41.k_of_j != 2 || b41.feasible != std::vector<long>{1, 2})
      return false;
    if (root_exponent_bound_fullshift(2, 1).k_of_j != 1) return false;
    if (root_exponent_bound_fullshift(8, 2).k_of_j != 6) return false;
    for (long n = 2; n <= 32; ++n)
      for (long j = 1; j <= 4; ++j)
        for (long k = 1; k <= 12; ++k) {
          mpz_class nj, root;
          mpz_ui_pow_ui(nj.get_mpz_t(), static_cast<unsigned long>(n),
                        static_cast<unsigned long>(j));
          bool exact = mpz_root(root.get_mpz_t(), nj.get_mpz_t(),
                                static_cast<unsigned long>(k)) != 0;
          Feasibility f =
              perron_root_feasible(AdjacencyMatrix::full_shift(n), j, k);
          if (f != (exact ? Feasibility::Yes : Feasibility::No)) return false;
        }
    return true;
  });

  criterion(10, "subgraph tower to level 4, verified; growth at j=30", [] {
    LabeledGraph base = power_labeled(LabeledGraph::even_shift(), 7);
    if (find_power_with_min_entry(LabeledGraph::even_shift()) != 7)
      return false;
    SubgraphTower t = build_subgraph_tower(base, 4);
    if (verify_subgraph_tower(t) < 4) return false;
    for (const auto& [j, level] : t.levels)
      for (long c : level.collisions)
        if (c > level.collision_bound) return false;
    GrowthSeries s = sofic_growth_series(t, {30});
    double target = 7.0 * std::log(kPhi);
    return std::abs(s.samples[0].a_n - target) <= 0.15;
  });

  criterion(11, "partition oracle: j=97 near ln 2, monotone from p_5", [] {
    auto s97 = partition_example_growth(2, 2, 25, {97});
    if (std::abs(s97[0].a_j - kLn2) > 0.05) return false;
    auto primes = first_primes(25);
    std::vector<long> tail(primes.begin() + 4, primes.end());
    auto series = partition_example_growth(2, 2, 25, tail);
    for (size_t i = 1; i < series.size(); ++i)
      if (std::abs(series[i].a_j - kLn2) >=
          std::abs(series[i - 1].a_j - kLn2))
        return false;
    return true;
  });

  criterion(12, "small-group lemmas by exhaustion", [] {
    ExplicitGroup a5 = ExplicitGroup::alternating(5);
    ExplicitGroup sq = ExplicitGroup::product(a5, a5);
    // covers the normal-subgroup enumeration of Alt5 x Alt5 (exactly the
    // four sub-products) plus the single-factor case
    if (!verify_smallisland(1) || !verify_smallisland(2)) return false;
    // simple-subgroup containment instances on Alt5 x Alt5
    std::vector<Perm> left;
    for (const Perm& p : a5.elements()) {
      Perm q(10);
      for (int i = 0; i < 5; ++i) q[i] = p[i];
      for (int i = 5; i < 10; ++i) q[i] = static_cast<uint8_t>(i);
      left.push_back(std::move(q));
    }
    std::vector<Perm> diag;
    for (const Perm& p : a5.elements()) {
      Perm q(10);
      for (int i = 0; i < 5; ++i) {
        q[i] = p[i];
        q[5 + i] = static_cast<uint8_t>(5 + p[i]);
      }
      diag.push_back(std::move(q));
    }
    ExplicitGroup left_g(10, left, "Alt5x1");
    ExplicitGroup diag_g(10, diag, "diag");
    if (!verify_pondlight(sq, left, diag_g)) return false;
    if (!verify_pondlight(sq, left, left_g)) return false;
    if (!verify_pondlight(sq, std::vector<Perm>(sq.elements()), diag_g))
      return false;
    // kernel truth table: no hypothesis-true / conclusion-false row
    PSParams p(1.0, 1.0, 1);
    for (long shift : {2L, 3L, 5L}) {
      auto rep =
          verify_kernel_lemma_toy(AdjacencyMatrix::full_shift(shift), {1}, p);
      if (!rep.all_consistent) return false;
    }
    return true;
  });

  criterion(13, "golden mean is obstructed from every full shift", [] {
    auto v = fullshift_obstruction(AdjacencyMatrix::golden_mean(), 50);
    return v.verdict == ClassificationVerdict::Verdict::NotIsomorphic &&
           v.reason == "conjugate-modulus-certificate";
  });

  if (g_failures) std::printf("%d criteria FAILED\n", g_failures);
  else std::printf("all 13 criteria passed\n");
  return g_failures;
}
