#include "qsymkit/spaces.hpp"

#include <algorithm>
#include <array>

#include "qsymkit/errors.hpp"

namespace qsym {

std::vector<std::array<int, 3>> FiniteMetricSpace::triangle_violations() const {
  // sqrt(a) > sqrt(b) + sqrt(c)  <=>  a > b + c and (a - b - c)^2 > 4bc.
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (i == j || j == k || i == k) continue;
        const Rational a = sqdist[i][k], b = sqdist[i][j], c = sqdist[j][k];
        if (a > b + c && (a - b - c) * (a - b - c) > 4 * b * c) out.push_back({i, j, k});
      }
  return out;
}

FiniteMetricSpace make_metric_space(std::vector<std::vector<Rational>> sqdist) {
  const int n = static_cast<int>(sqdist.size());
  for (const auto& row : sqdist)
    if (static_cast<int>(row.size()) != n) throw DomainError("squared-distance matrix not square");
  for (int i = 0; i < n; ++i) {
    if (sqdist[i][i] != 0) throw DomainError("nonzero diagonal in squared-distance matrix");
    for (int j = 0; j < n; ++j) {
      if (sqdist[i][j] != sqdist[j][i]) throw DomainError("squared-distance matrix not symmetric");
      if (i != j && sqdist[i][j] <= 0)
        throw DomainError("off-diagonal squared distances must be positive");
    }
  }
  return FiniteMetricSpace{n, std::move(sqdist)};
}

FiniteGraph make_graph(std::vector<std::string> vertices,
                       const std::vector<std::pair<int, int>>& edges, bool directed) {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("edge endpoint out of range");
    if (a == b) throw DomainError("self-loops are excluded");
    adj[a][b] = true;
    if (!directed) adj[b][a] = true;
  }
  return FiniteGraph{std::move(vertices), directed, std::move(adj)};
}

MetricWithInfinities graph_to_metric(const FiniteGraph& g) {
  if (g.directed) throw DomainError("graph metric requires an undirected graph");
  const int n = g.size();
  MetricWithInfinities m;
  m.n = n;
  m.finite.assign(n, std::vector<bool>(n, false));
  m.sqdist.assign(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    m.finite[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (i != j && g.edge(i, j)) {
        m.finite[i][j] = true;
        m.sqdist[i][j] = 1;
      }
  }
  return m;
}

std::vector<int> TreeDiagram::children(int level, int vertex) const {
  std::vector<int> out;
  const auto& pmap = parents[level - 1];
  for (int v = 0; v < static_cast<int>(pmap.size()); ++v)
    if (pmap[v] == vertex) out.push_back(v);
  return out;
}

TreeDiagram make_tree_diagram(std::vector<int> levels, std::vector<std::vector<int>> parents,
                              std::vector<std::vector<std::string>> labels) {
  if (levels.empty() || levels[0] != 1) throw DomainError("level 0 must hold exactly the root");
  if (parents.size() + 1 != levels.size()) throw DomainError("parent map count mismatch");
  for (std::size_t j = 0; j < parents.size(); ++j) {
    if (static_cast<int>(parents[j].size()) != levels[j + 1])
      throw DomainError("parent map size mismatch at level " + std::to_string(j + 1));
    std::vector<bool> hit(levels[j], false);
    for (int p : parents[j]) {
      if (p < 0 || p >= levels[j]) throw DomainError("parent index out of range");
      hit[p] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw DomainError("parent map must be surjective at level " + std::to_string(j + 1));
  }
  if (labels.empty()) {
    labels.resize(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j)
      for (int v = 0; v < levels[j]; ++v) labels[j].push_back(std::to_string(v + 1));
  }
  if (labels.size() != levels.size()) throw DomainError("label level count mismatch");
  for (std::size_t j = 0; j < levels.size(); ++j)
    if (static_cast<int>(labels[j].size()) != levels[j])
      throw DomainError("label count mismatch at level " + std::to_string(j));
  return TreeDiagram{std::move(levels), std::move(parents), std::move(labels)};
}

TreeDiagram uniform_tree_diagram(int branching, int depth) {
  if (branching < 1 || depth < 0) throw DomainError("invalid tree parameters");
  std::vector<int> levels{1};
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<std::string>> labels{{""}};
  for (int d = 1; d <= depth; ++d) {
    const int prev = levels.back();
    levels.push_back(prev * branching);
    std::vector<int> pmap(prev * branching);
    std::vector<std::string> lab(prev * branching);
    for (int v = 0; v < prev * branching; ++v) {
      pmap[v] = v / branching;
      lab[v] = labels[d - 1][v / branching] + std::to_string(v % branching + 1);
    }
    parents.push_back(std::move(pmap));
    labels.push_back(std::move(lab));
  }
  labels[0][0] = "e";
  return make_tree_diagram(std::move(levels), std::move(parents), std::move(labels));
}

TreeDiagram chain_diagram(int depth) { return uniform_tree_diagram(1, depth); }

FiniteGraph truncate(const TreeDiagram& t, int n) {
  if (n < 0 || n > t.depth()) throw DomainError("truncation level out of range");
  std::vector<std::string> vertices;
  std::vector<int> offset(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    offset[j] = static_cast<int>(vertices.size());
    for (int v = 0; v < t.levels[j]; ++v)
      vertices.push_back("(" + std::to_string(j) + "," + std::to_string(v) + ")");
  }
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= n; ++j)
    for (int v = 0; v < t.levels[j]; ++v)
      edges.emplace_back(offset[j] + v, offset[j - 1] + t.parents[j - 1][v]);
  return make_graph(std::move(vertices), edges, false);
}

std::vector<std::vector<Rational>> laplacian(const FiniteMetricSpace& x) {
  if (x.n < 2) throw DomainError("laplacian requires at least two points");
  const Rational scale(4, 2 * x.n - 1);
  std::vector<std::vector<Rational>> l(x.n, std::vector<Rational>(x.n, 0));
  for (int i = 0; i < x.n; ++i) {
    Rational diag = 0;
    for (int j = 0; j < x.n; ++j) {
      if (i == j) continue;
      l[i][j] = scale / x.sqdist[i][j];
      diag += l[i][j];
    }
    l[i][i] = -diag;
  }
  return l;
}

std::string matrix_text(const std::vector<std::vector<Rational>>& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " / ";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ' ';
      out += rational_text(m[i][j]);
    }
  }
  out += ")";
  return out;
}

}  // namespace qsym
