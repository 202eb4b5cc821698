// sftlab: command-line surface for the shift-of-finite-type workbench.
// Every subcommand prints a single JSON document (or CSV with --out); errors
// come back as {"error": code, "message": ...} with a stable exit status:
// 2 input validation, 3 precondition, 4 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>

#include "sftlab/classify.hpp"
#include "sftlab/group_oracle.hpp"
#include "sftlab/io.hpp"
#include "sftlab/properties.hpp"
#include "sftlab/sofic.hpp"

using nlohmann::json;
using namespace sftlab;

namespace {

int exit_status_for(const std::string& code) {
  if (code == "invalid-input" || code == "invalid-partition") return 2;
  if (code == "too-large" || code == "resource-cap") return 4;
  return 3;
}

json verdict_json(const ClassificationVerdict& v) {
  json out{{"verdict", ClassificationVerdict::verdict_name(v.verdict)},
           {"reason", v.reason}};
  if (v.witness) out["witness"] = {v.witness->first, v.witness->second};
  if (v.integer_power) out["integer_power"] = v.integer_power->get_str();
  return out;
}

json enclosure_json(double lo, double hi) {
  return json{{"lo", lo}, {"hi", hi}, {"width", hi - lo}};
}

std::vector<long> doubling_ladder(long n_max) {
  std::set<long> ns;
  for (long n = n_max; n >= 1; n /= 2) ns.insert(n);
  return {ns.begin(), ns.end()};
}

json growth_json(const GrowthSeries& s) {
  json samples = json::array();
  double target = 0.5 * (s.target_lo + s.target_hi);
  for (const auto& sm : s.samples)
    samples.push_back({{"n", sm.n},
                       {"a_n", sm.a_n},
                       {"residual", sm.a_n - target},
                       {"exact", sm.exact}});
  return json{{"target_lo", s.target_lo},
              {"target_hi", s.target_hi},
              {"k", s.k},
              {"samples", std::move(samples)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for shifts of finite type and their symmetry growth"};
  app.require_subcommand(1);

  std::string matrix_path, matrix_path_b, graph_path, partition_path, out_path;
  double tol = 1e-12, epsilon = 0.05;
  long k = 1, j = 1, n = 1, n_max = 64, k_max = 200, p_max = 10, q_max = 10;
  long j_max = 4, digit_budget = 100000, base_a = 2, prime_q = 2;
  long threshold = -1;
  int prime_count = 25;
  uint64_t seed = 1;
  long cases = 1000;
  bool brute = false;
  long fs_m = 2, fs_n = 2;

  auto* entropy = app.add_subcommand("entropy", "certified lambda enclosure");
  entropy->add_option("--matrix", matrix_path)->required();
  entropy->add_option("--tol", tol);

  auto* power = app.add_subcommand("power", "exact matrix power");
  power->add_option("--matrix", matrix_path)->required();
  power->add_option("--k", k)->required();

  auto* periodic = app.add_subcommand("periodic", "count points of period n");
  periodic->add_option("--matrix", matrix_path)->required();
  periodic->add_option("--n", n)->required();
  periodic->add_flag("--brute-force", brute);

  auto* growth = app.add_subcommand("growth", "symmetry growth series a_n");
  growth->add_option("--matrix", matrix_path)->required();
  growth->add_option("--k", k);
  growth->add_option("--n-max", n_max)->required();
  growth->add_option("--digit-budget", digit_budget);
  growth->add_option("--out", out_path, "write CSV here instead of JSON");

  auto* admissible = app.add_subcommand("admissible", "(C,D,r) search");
  admissible->add_option("--matrix", matrix_path)->required();
  admissible->add_option("--epsilon", epsilon);
  admissible->add_option("--k-max", k_max);

  auto* upper = app.add_subcommand("upper-bound", "order bound inequalities");
  upper->add_option("--matrix", matrix_path)->required();
  upper->add_option("--epsilon", epsilon);
  upper->add_option("--k-max", k_max);
  upper->add_option("--n-max", n_max);

  auto* classify = app.add_subcommand("classify", "stabilized classification");
  auto* cls_full = classify->add_subcommand("full-shift", "m vs n");
  cls_full->add_option("m", fs_m)->required();
  cls_full->add_option("n", fs_n)->required();
  auto* cls_ratio = classify->add_subcommand("ratio", "entropy ratio witness");
  cls_ratio->add_option("--matrix-a", matrix_path)->required();
  cls_ratio->add_option("--matrix-b", matrix_path_b)->required();
  cls_ratio->add_option("--p-max", p_max);
  cls_ratio->add_option("--q-max", q_max);
  auto* cls_obs = classify->add_subcommand("obstruction", "full-shift test");
  cls_obs->add_option("--matrix", matrix_path)->required();
  cls_obs->add_option("--k-max", k_max);
  classify->require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "Perron root feasibility");
  roots->add_option("--matrix", matrix_path);
  roots->add_option("--n", n);
  roots->add_option("--j", j);
  roots->add_option("--k", k);

  auto* sofic = app.add_subcommand("sofic", "labeled graphs and the tower");
  auto* sof_check = sofic->add_subcommand("check", "right-resolving test");
  sof_check->add_option("--graph", graph_path)->required();
  auto* sof_power = sofic->add_subcommand("power", "level-j labeling");
  sof_power->add_option("--graph", graph_path)->required();
  sof_power->add_option("--j", j)->required();
  auto* sof_split = sofic->add_subcommand("insplit", "in-splitting");
  sof_split->add_option("--graph", graph_path)->required();
  sof_split->add_option("--partition", partition_path)->required();
  auto* sof_build = sofic->add_subcommand("build", "subgraph tower");
  sof_build->add_option("--graph", graph_path)->required();
  sof_build->add_option("--j-max", j_max);
  sof_build->add_option("--amplify", threshold,
                        "first raise the base so min entries reach 3r");
  auto* sof_growth = sofic->add_subcommand("growth", "tower growth series");
  sof_growth->add_option("--graph", graph_path)->required();
  sof_growth->add_option("--j-max", j_max);
  sof_growth->add_option("--amplify", threshold);
  sofic->require_subcommand(1);

  auto* oracle = app.add_subcommand("oracle", "closed-form references");
  auto* ora_part = oracle->add_subcommand("partition", "q-cycle product growth");
  ora_part->add_option("--a", base_a);
  ora_part->add_option("--q", prime_q);
  ora_part->add_option("--primes", prime_count);
  oracle->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "brute-force checks");
  auto* ver_lem = verify->add_subcommand("lemmas", "small-group lemmas");
  auto* ver_prop = verify->add_subcommand("properties", "seeded random corpus");
  ver_prop->add_option("--seed", seed);
  ver_prop->add_option("--cases", cases);
  verify->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*entropy) {
      AdjacencyMatrix a = load_matrix(matrix_path);
      PerronData eig = perron_eigendata(a, tol);
      Enclosure h = topological_entropy(a, tol);
      emit(json{{"lambda", enclosure_json(eig.lambda_lo, eig.lambda_hi)},
                {"entropy", enclosure_json(h.lo, h.hi)},
                {"iterations", eig.iterations}});
    } else if (*power) {
      emit(json::parse(matrix_to_json(matrix_power(load_matrix(matrix_path), k))));
    } else if (*periodic) {
      mpz_class count = periodic_points(load_matrix(matrix_path), n, brute);
      emit(json{{"n", n},
                {"count", count.get_str()},
                {"brute_force", brute}});
    } else if (*growth) {
      AdjacencyMatrix a = load_matrix(matrix_path);
      GrowthOptions opts;
      opts.digit_budget = digit_budget;
      GrowthSeries s = growth_series(a, k, doubling_ladder(n_max), opts);
      if (!out_path.empty()) {
        write_file(out_path, growth_series_to_csv(s));
        emit(json{{"written", out_path}, {"samples", s.samples.size()}});
      } else {
        emit(growth_json(s));
      }
    } else if (*admissible) {
      AdjacencyMatrix a = load_matrix(matrix_path);
      AdmissibleResult res = admissible_params(a, epsilon, k_max);
      emit(json{{"C", res.params.C},
                {"D", res.params.D},
                {"r", res.params.r},
                {"K", res.K},
                {"rho_min", res.rho_min},
                {"rho_max", res.rho_max},
                {"verified_through", k_max}});
    } else if (*upper) {
      AdjacencyMatrix a = load_matrix(matrix_path);
      AdmissibleResult res = admissible_params(a, epsilon, k_max);
      std::vector<long> ns;
      for (long i = 1; i <= n_max; ++i) ns.push_back(i);
      UpperBoundReport rep = upper_bound_check(a, ns, res.params);
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n},
                        {"holds_i", row.holds_i},
                        {"holds_ii", row.holds_ii}});
      emit(json{{"first_n_i", rep.first_n_i},
                {"first_n_ii", rep.first_n_ii},
                {"violations_after_i", rep.violations_after_i},
                {"violations_after_ii", rep.violations_after_ii},
                {"rows", std::move(rows)}});
    } else if (*cls_full) {
      emit(verdict_json(fullshift_isomorphic(fs_m, fs_n)));
    } else if (*cls_ratio) {
      emit(verdict_json(entropy_ratio_witness(load_matrix(matrix_path),
                                              load_matrix(matrix_path_b),
                                              p_max, q_max)));
    } else if (*cls_obs) {
      emit(verdict_json(fullshift_obstruction(load_matrix(matrix_path), k_max)));
    } else if (*roots) {
      if (!matrix_path.empty()) {
        Feasibility f = perron_root_feasible(load_matrix(matrix_path), j, k);
        const char* name = f == Feasibility::Yes      ? "yes"
                           : f == Feasibility::No     ? "no"
                                                      : "unknown";
        emit(json{{"j", j}, {"k", k}, {"feasible", name}});
      } else {
        RootBound rb = root_exponent_bound_fullshift(n, j);
        emit(json{{"n", n},
                  {"j", j},
                  {"k_bound", rb.k_of_j},
                  {"feasible", rb.feasible}});
      }
    } else if (*sof_check) {
      LabeledGraph g = load_labeled_graph(graph_path);
      emit(json{{"right_resolving", is_right_resolving(g)},
                {"alphabet", g.alphabet()}});
    } else if (*sof_power) {
      emit(json::parse(
          labeled_graph_to_json(power_labeled(load_labeled_graph(graph_path), j))));
    } else if (*sof_split) {
      LabeledGraph g = load_labeled_graph(graph_path);
      auto part = json::parse(read_file(partition_path))
                      .get<std::vector<std::vector<std::vector<int>>>>();
      LabeledGraph split = in_split(g, part);
      emit(json::parse(labeled_graph_to_json(split)));
    } else if (*sof_build || *sof_growth) {
      LabeledGraph g = load_labeled_graph(graph_path);
      if (threshold >= 0) {
        long level = find_power_with_min_entry(
            g, threshold > 0 ? threshold : -1);
        g = power_labeled(g, level);
      }
      SubgraphTower t = build_subgraph_tower(g, j_max);
      if (*sof_build) {
        json levels = json::array();
        for (const auto& [lv, level] : t.levels)
          levels.push_back({{"j", lv},
                            {"b", level.b.get_str()},
                            {"seed_size", level.seed_size},
                            {"collision_bound", level.collision_bound.get_str()}});
        emit(json{{"levels", std::move(levels)}, {"verified", true}});
      } else {
        emit(growth_json(sofic_growth_series(t)));
      }
    } else if (*ora_part) {
      std::vector<long> js = first_primes(prime_count);
      auto series =
          partition_example_growth(base_a, prime_q, prime_count, js);
      json rows = json::array();
      for (const auto& s : series)
        rows.push_back({{"j", s.j},
                        {"a_j", s.representable ? json(s.a_j) : json()},
                        {"representable", s.representable},
                        {"s", s.s.get_str()}});
      emit(json{{"target", std::log(static_cast<double>(base_a))},
                {"samples", std::move(rows)}});
    } else if (*ver_lem) {
      bool island1 = verify_smallisland(1);
      bool island2 = verify_smallisland(2);
      ExplicitGroup a5 = ExplicitGroup::alternating(5);
      ExplicitGroup sq = ExplicitGroup::product(a5, a5);
      size_t normals = normal_subgroups(sq).size();
      KernelLemmaReport krep = verify_kernel_lemma_toy(
          AdjacencyMatrix::full_shift(5), {1}, PSParams(1.0, 1.0, 1));
      json krows = json::array();
      for (const auto& row : krep.rows)
        krows.push_back({{"m", row.m},
                         {"group_order", row.group_order.get_str()},
                         {"p_m", row.p_m.get_str()},
                         {"hypothesis", row.hypothesis},
                         {"conclusion", row.conclusion},
                         {"consistent", row.consistent}});
      emit(json{{"subproduct_r1", island1},
                {"subproduct_r2", island2},
                {"alt5_squared_normal_subgroups", normals},
                {"kernel_toy", std::move(krows)},
                {"kernel_toy_consistent", krep.all_consistent}});
    } else if (*ver_prop) {
      PropertyReport rep = run_symmetry_properties(seed, cases);
      emit(json{{"seed", rep.seed},
                {"cases", rep.cases},
                {"homomorphism_violations", rep.homomorphism_violations},
                {"evenness_violations", rep.evenness_violations},
                {"identity_violations", rep.identity_violations},
                {"clean", rep.clean()}});
    }
  } catch (const Error& e) {
    emit(json{{"error", e.code()}, {"message", e.what()}});
    return exit_status_for(e.code());
  } catch (const std::exception& e) {
    emit(json{{"error", "internal"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
