#pragma once

#include <string>
#include <vector>

#include "qsymkit/spaces.hpp"

namespace qsym {

// A classical point of a presentation: a permutation satisfying every
// relation of its source exactly (as a 0/1 matrix).
struct PermutationSolution {
  std::vector<int> perm;  // one-line notation, 0-based
  std::string source;

  bool operator==(const PermutationSolution& other) const { return perm == other.perm; }
  bool operator<(const PermutationSolution& other) const { return perm < other.perm; }
};

inline constexpr int kDefaultSizeCap = 12;

// All permutations preserving the squared-distance matrix. Backtracking with
// distance-multiset vertex invariants; lexicographically sorted.
std::vector<PermutationSolution> enumerate_metric_automorphisms(const FiniteMetricSpace& x,
                                                                int size_cap = kDefaultSizeCap);

// All adjacency-preserving permutations, same search strategy.
std::vector<PermutationSolution> enumerate_graph_automorphisms(const FiniteGraph& g,
                                                               int size_cap = kDefaultSizeCap);

// Graph automorphisms of the truncation that preserve every level (these are
// exactly the symmetries of the diagram itself).
std::vector<PermutationSolution> enumerate_tree_diagram_automorphisms(const TreeDiagram& t, int n,
                                                                      int size_cap = 32);

struct GroupSummary {
  long order = 0;
  std::vector<std::vector<int>> orbits;  // sorted vertex orbits
};

// Requires closure under composition (violations signal an enumeration bug).
GroupSummary group_order_and_orbits(const std::vector<PermutationSolution>& sols);

std::string permutation_text(const std::vector<int>& perm);

}  // namespace qsym
