#include "sftlab/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sftlab {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("malformed JSON");
  return j;
}

}  // namespace

std::string matrix_to_json(const AdjacencyMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.size(); ++j) {
      const mpz_class& e = a.at(i, j);
      if (!e.fits_slong_p())
        throw TooLarge("entry does not fit in 64 bits; not serializable");
      row.push_back(mpz_get_si(e.get_mpz_t()));
    }
    rows.push_back(std::move(row));
  }
  json out{{"size", a.size()}, {"rows", std::move(rows)}};
  return out.dump(2) + "\n";
}

AdjacencyMatrix matrix_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("rows") || !j["rows"].is_array())
    throw InvalidInput("matrix JSON needs a \"rows\" array");
  std::vector<std::vector<long>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw InvalidInput("matrix rows must be arrays");
    std::vector<long> row;
    for (const auto& e : r) {
      if (!e.is_number_integer()) throw InvalidInput("entries must be integers");
      row.push_back(e.get<long>());
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("size") &&
      j["size"].get<size_t>() != rows.size())
    throw InvalidInput("declared size does not match rows");
  return AdjacencyMatrix::from_rows(rows);
}

AdjacencyMatrix load_matrix(const std::string& path) {
  return matrix_from_json(read_file(path));
}

std::string labeled_graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.graph.edges())
    edges.push_back(
        {{"from", e.from}, {"to", e.to}, {"label", g.labels[e.id]}});
  json out{{"vertices", g.graph.vertex_count()}, {"edges", std::move(edges)}};
  return out.dump(2) + "\n";
}

LabeledGraph labeled_graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("labeled graph JSON needs \"vertices\" and \"edges\"");
  int n = j["vertices"].get<int>();
  if (n < 1) throw InvalidInput("vertex count must be positive");
  std::vector<mpz_class> entries(static_cast<size_t>(n) * n, 0);
  struct In {
    int from, to;
    std::string label;
  };
  std::vector<In> ins;
  for (const auto& e : j["edges"]) {
    In in{e.at("from").get<int>(), e.at("to").get<int>(),
          e.at("label").get<std::string>()};
    if (in.from < 0 || in.from >= n || in.to < 0 || in.to >= n)
      throw InvalidInput("edge endpoint out of range");
    entries[in.from * n + in.to] += 1;
    ins.push_back(std::move(in));
  }
  AdjacencyMatrix a(n, entries);
  // labels follow edge-id order: row-major pairs, input order within a pair
  std::stable_sort(ins.begin(), ins.end(), [](const In& x, const In& y) {
    if (x.from != y.from) return x.from < y.from;
    return x.to < y.to;
  });
  LabeledGraph g{EdgeGraph::from_matrix(a), {}};
  for (const In& in : ins) g.labels.push_back(in.label);
  return g;
}

LabeledGraph load_labeled_graph(const std::string& path) {
  return labeled_graph_from_json(read_file(path));
}

std::string symmetry_to_json(const SimpleSymmetry& s) {
  int r = s.base.size();
  json comps = json::object();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto& c = s.components[i * r + j];
      if (c.empty()) continue;
      comps[std::to_string(i) + "," + std::to_string(j)] = c;
    }
  json out{{"level", s.level}, {"components", std::move(comps)}};
  return out.dump(2) + "\n";
}

SimpleSymmetry symmetry_from_json(const std::string& text,
                                  const AdjacencyMatrix& base) {
  json j = parse(text);
  if (!j.contains("level") || !j.contains("components"))
    throw InvalidInput("symmetry JSON needs \"level\" and \"components\"");
  SymmetryContext ctx(base);
  SimpleSymmetry s = ctx.identity(j["level"].get<long>());
  int r = base.size();
  for (const auto& [key, val] : j["components"].items()) {
    std::istringstream ks(key);
    int i, q;
    char comma;
    if (!(ks >> i >> comma >> q) || comma != ',' || i < 0 || i >= r ||
        q < 0 || q >= r)
      throw InvalidInput("bad component key: " + key);
    auto& comp = s.components[i * r + q];
    std::vector<uint32_t> perm = val.get<std::vector<uint32_t>>();
    if (perm.size() != comp.size())
      throw InvalidInput("component size mismatch at " + key);
    std::vector<char> seen(perm.size(), 0);
    for (uint32_t x : perm) {
      if (x >= perm.size() || seen[x])
        throw InvalidInput("component is not a permutation at " + key);
      seen[x] = 1;
    }
    comp = std::move(perm);
  }
  return s;
}

std::string growth_series_to_csv(const GrowthSeries& s) {
  std::ostringstream out;
  out << "n,a_n,residual,target\n";
  double target = 0.5 * (s.target_lo + s.target_hi);
  out.precision(12);
  for (const auto& sample : s.samples)
    out << sample.n << "," << sample.a_n << "," << (sample.a_n - target)
        << "," << target << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

}  // namespace sftlab
