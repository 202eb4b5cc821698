#ifndef SFTLAB_IO_HPP
#define SFTLAB_IO_HPP

#include <string>

#include "sftlab/sofic.hpp"
#include "sftlab/symmetry.hpp"

namespace sftlab {

// JSON shapes:
//   matrix        {"size": r, "rows": [[...], ...]}
//   labeled graph {"vertices": n, "edges": [{"from": i, "to": j, "label": s}]}
//   symmetry      {"level": m, "components": {"i,j": [images...]}}
// Entries must fit in signed 64-bit on input; larger matrices are computed,
// not parsed.

std::string matrix_to_json(const AdjacencyMatrix& a);
AdjacencyMatrix matrix_from_json(const std::string& text);
AdjacencyMatrix load_matrix(const std::string& path);

std::string labeled_graph_to_json(const LabeledGraph& g);
LabeledGraph labeled_graph_from_json(const std::string& text);
LabeledGraph load_labeled_graph(const std::string& path);

std::string symmetry_to_json(const SimpleSymmetry& s);
SimpleSymmetry symmetry_from_json(const std::string& text,
                                  const AdjacencyMatrix& base);

/// header n,a_n,residual,target; residual = a_n - target midpoint
std::string growth_series_to_csv(const GrowthSeries& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sftlab

#endif
