#pragma once

#include <string>

#include "qsymkit/models.hpp"
#include "qsymkit/spaces.hpp"

namespace qsym {

// JSON schemas (rationals serialized "a/b"):
//   metric space  {"n": int, "sqdist": [[rational-as-string]]}
//   graph         {"vertices": [string], "edges": [[string,string]], "directed": bool}
//   tree diagram  {"levels": [int], "parents": [[int]]}
//   matrix model  {"dim": int, "assignment": {"name": [[rational-as-string]]}}
// Malformed documents raise ParseError.

FiniteMetricSpace parse_metric_space(const std::string& json_text);
FiniteGraph parse_graph(const std::string& json_text);
TreeDiagram parse_tree_diagram(const std::string& json_text);
MatrixModel parse_matrix_model(const std::string& json_text, const Presentation& p);

std::string metric_space_json(const FiniteMetricSpace& x);
std::string graph_json(const FiniteGraph& g);
std::string matrix_model_json(const MatrixModel& m, const Presentation& p);

std::string read_file(const std::string& path);

}  // namespace qsym
