#include "qsymkit/jsonio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsymkit/errors.hpp"

namespace qsym {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

Rational rational_field(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"a/b\" string");
}

std::vector<std::vector<Rational>> rational_matrix(const json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of arrays)");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("expected a matrix row");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_field(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

FiniteMetricSpace parse_metric_space(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("n") || !j.contains("sqdist")) throw ParseError("metric space needs n and sqdist");
  const int n = j.at("n").get<int>();
  auto sq = rational_matrix(j.at("sqdist"));
  if (static_cast<int>(sq.size()) != n) throw ParseError("sqdist row count differs from n");
  return make_metric_space(std::move(sq));
}

FiniteGraph parse_graph(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("vertices") || !j.contains("edges")) throw ParseError("graph needs vertices and edges");
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (!index.emplace(vertices[i], i).second) throw ParseError("duplicate vertex label");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of labels");
    const auto a = index.find(e[0].get<std::string>());
    const auto b = index.find(e[1].get<std::string>());
    if (a == index.end() || b == index.end()) throw ParseError("edge uses an unknown vertex");
    edges.emplace_back(a->second, b->second);
  }
  const bool directed = j.value("directed", false);
  return make_graph(std::move(vertices), edges, directed);
}

TreeDiagram parse_tree_diagram(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("levels") || !j.contains("parents"))
    throw ParseError("tree diagram needs levels and parents");
  auto levels = j.at("levels").get<std::vector<int>>();
  auto parents = j.at("parents").get<std::vector<std::vector<int>>>();
  return make_tree_diagram(std::move(levels), std::move(parents));
}

MatrixModel parse_matrix_model(const std::string& json_text, const Presentation& p) {
  const json j = parse_json(json_text);
  if (!j.contains("dim") || !j.contains("assignment"))
    throw ParseError("model needs dim and assignment");
  MatrixModel m;
  m.dim = j.at("dim").get<int>();
  if (m.dim < 1) throw ParseError("model dimension must be positive");
  for (const auto& [name, value] : j.at("assignment").items()) {
    const int id = p.gens->id_of(name);
    if (id < 0) throw ParseError("assignment names unknown generator '" + name + "'");
    auto rows = rational_matrix(value);
    RMatrix mat(m.dim, m.dim);
    if (static_cast<int>(rows.size()) != m.dim) throw ParseError("matrix row count != dim");
    for (int r = 0; r < m.dim; ++r) {
      if (static_cast<int>(rows[r].size()) != m.dim) throw ParseError("matrix column count != dim");
      for (int c = 0; c < m.dim; ++c) mat.at(r, c) = rows[r][c];
    }
    m.assignment.emplace(id, std::move(mat));
  }
  return m;
}

std::string metric_space_json(const FiniteMetricSpace& x) {
  json j;
  j["n"] = x.n;
  json rows = json::array();
  for (const auto& row : x.sqdist) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_text(v));
    rows.push_back(std::move(r));
  }
  j["sqdist"] = std::move(rows);
  return j.dump(2);
}

std::string graph_json(const FiniteGraph& g) {
  json j;
  j["vertices"] = g.vertices;
  j["directed"] = g.directed;
  json edges = json::array();
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (g.edge(a, b) && (g.directed || a < b))
        edges.push_back(json::array({g.vertices[a], g.vertices[b]}));
  j["edges"] = std::move(edges);
  return j.dump(2);
}

std::string matrix_model_json(const MatrixModel& m, const Presentation& p) {
  json j;
  j["dim"] = m.dim;
  json assignment;
  for (const auto& g : p.gens->all()) {
    const RMatrix& mat = m.matrix(g.id);
    json rows = json::array();
    for (int r = 0; r < mat.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < mat.cols(); ++c) row.push_back(rational_text(mat.at(r, c)));
      rows.push_back(std::move(row));
    }
    assignment[g.name] = std::move(rows);
  }
  j["assignment"] = std::move(assignment);
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace qsym
