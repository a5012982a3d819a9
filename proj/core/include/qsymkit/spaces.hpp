#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qsymkit/rational.hpp"

namespace qsym {

// Finite metric space stored through exact squared distances.
struct FiniteMetricSpace {
  int n = 0;
  std::vector<std::vector<Rational>> sqdist;

  // Triples (i, j, k) with d(i,k) > d(i,j) + d(j,k), compared exactly on
  // squared quantities. A violation is a warning, not an error.
  std::vector<std::array<int, 3>> triangle_violations() const;
};

// Throws DomainError unless sqdist is symmetric with zero diagonal and
// strictly positive off-diagonal entries.
FiniteMetricSpace make_metric_space(std::vector<std::vector<Rational>> sqdist);

struct FiniteGraph {
  std::vector<std::string> vertices;
  bool directed = false;
  std::vector<std::vector<bool>> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  bool edge(int a, int b) const { return adjacency[a][b]; }
};

// Loop-free; undirected graphs store both orientations.
FiniteGraph make_graph(std::vector<std::string> vertices,
                       const std::vector<std::pair<int, int>>& edges, bool directed);

// Graph metric d_E: squared distance 1 on edges, infinity elsewhere.
// Infinity is a token; consumers branch on the finite/infinite partition.
struct MetricWithInfinities {
  int n = 0;
  std::vector<std::vector<bool>> finite;      // off-diagonal: true exactly on edges
  std::vector<std::vector<Rational>> sqdist;  // meaningful where finite
};

MetricWithInfinities graph_to_metric(const FiniteGraph& g);

// Leveled tree with surjective parent maps; level 0 is a single root.
struct TreeDiagram {
  std::vector<int> levels;                      // vertex counts, levels[0] == 1
  std::vector<std::vector<int>> parents;        // parents[j][v]: level j+1 -> level j
  std::vector<std::vector<std::string>> labels; // display labels per level

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  std::vector<int> children(int level, int vertex) const;  // level >= 1, children on that level
};

TreeDiagram make_tree_diagram(std::vector<int> levels, std::vector<std::vector<int>> parents,
                              std::vector<std::vector<std::string>> labels = {});

// Uniform branching helpers. Binary trees carry multi-index labels
// ("1", "2", "11", ...).
TreeDiagram uniform_tree_diagram(int branching, int depth);
TreeDiagram chain_diagram(int depth);

// Undirected graph on the union of levels 0..n, edges {v, parent(v)};
// vertices labeled (level, index) for deterministic ordering.
FiniteGraph truncate(const TreeDiagram& t, int n);

// Laplacian of a finite metric space: off-diagonal 4/(2n-1) * 1/d^2(i,j),
// diagonal the negated row sum. Requires n >= 2.
std::vector<std::vector<Rational>> laplacian(const FiniteMetricSpace& x);

std::string matrix_text(const std::vector<std::vector<Rational>>& m);

}  // namespace qsym
