#include <doctest.h>

#include <sstream>

#include "sftlab/io.hpp"

using namespace sftlab;

TEST_CASE("matrix JSON round-trip") {
  AdjacencyMatrix a = AdjacencyMatrix::from_rows({{1, 2}, {3, 4}});
  AdjacencyMatrix b = matrix_from_json(matrix_to_json(a));
  CHECK(a == b);
  CHECK_THROWS_AS(matrix_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(matrix_from_json("{\"rows\": [[1,2]]}"), InvalidInput);
  CHECK_THROWS_AS(matrix_from_json("{\"size\": 3, \"rows\": [[1,1],[1,1]]}"),
                  InvalidInput);
}

TEST_CASE("labeled graph JSON round-trip") {
  LabeledGraph g = LabeledGraph::even_shift();
  LabeledGraph h = labeled_graph_from_json(labeled_graph_to_json(g));
  CHECK(g.graph.matrix() == h.graph.matrix());
  CHECK(g.labels == h.labels);
  CHECK_THROWS_AS(labeled_graph_from_json("{\"vertices\": 1, \"edges\": "
                                          "[{\"from\":0,\"to\":3,\"label\":\"x\"}]}"),
                  InvalidInput);
}

TEST_CASE("symmetry JSON round-trip") {
  AdjacencyMatrix a = AdjacencyMatrix::golden_mean();
  SymmetryContext ctx(a);
  std::mt19937_64 rng(3);
  SimpleSymmetry s = ctx.random_symmetry(3, rng);
  SimpleSymmetry t = symmetry_from_json(symmetry_to_json(s), a);
  CHECK(s.level == t.level);
  CHECK(s.components == t.components);
  CHECK_THROWS_AS(
      symmetry_from_json("{\"level\": 1, \"components\": {\"0,0\": [0, 0]}}",
                         a),
      InvalidInput);
}

TEST_CASE("growth CSV format") {
  GrowthSeries s{AdjacencyMatrix::full_shift(2), 1, {}, 0.69, 0.69};
  s.samples.push_back({4, 0.75, ExtLog::from_linear(2.0), true});
  s.samples.push_back({8, 0.72, ExtLog::from_linear(2.0), true});
  std::istringstream csv(growth_series_to_csv(s));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,a_n,residual,target");
  std::getline(csv, line);
  CHECK(line.substr(0, 2) == "4,");
  std::getline(csv, line);
  CHECK(line.substr(0, 2) == "8,");
}
