#include "qsymkit/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qsymkit/errors.hpp"

namespace qsym {

namespace {

// Backtracking over images with an invariant-class pruning table:
// candidate(v) may only be a vertex of the same invariant class, and every
// already-placed pair must be compatible.
template <typename Compatible>
std::vector<PermutationSolution> enumerate(int n, const std::vector<int>& invariant_class,
                                           Compatible compatible, const std::string& source) {
  std::vector<PermutationSolution> out;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(PermutationSolution{image, source});
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || invariant_class[c] != invariant_class[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = compatible(v, c, u, image[u]);
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      self(self, v + 1);
      image[v] = -1;
      used[c] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> classes_from_keys(const std::vector<std::string>& keys) {
  std::map<std::string, int> ids;
  std::vector<int> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
  return out;
}

}  // namespace

std::vector<PermutationSolution> enumerate_metric_automorphisms(const FiniteMetricSpace& x,
                                                                int size_cap) {
  if (x.n > size_cap)
    throw DomainError("metric space exceeds the size cap (" + std::to_string(size_cap) + ")");
  std::vector<std::string> keys(x.n);
  for (int v = 0; v < x.n; ++v) {
    std::vector<std::string> row;
    for (int j = 0; j < x.n; ++j)
      if (j != v) row.push_back(rational_text(x.sqdist[v][j]));
    std::sort(row.begin(), row.end());
    for (const auto& s : row) keys[v] += s + ";";
  }
  auto compatible = [&](int v, int c, int u, int cu) { return x.sqdist[v][u] == x.sqdist[c][cu]; };
  return enumerate(x.n, classes_from_keys(keys), compatible, "metric");
}

std::vector<PermutationSolution> enumerate_graph_automorphisms(const FiniteGraph& g,
                                                               int size_cap) {
  const int n = g.size();
  if (n > size_cap)
    throw DomainError("graph exceeds the size cap (" + std::to_string(size_cap) + ")");
  // Invariant: out/in degree plus the multiset of neighbour degrees.
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < n; ++j) degree[v] += g.edge(v, j) ? 1 : 0;
  std::vector<std::string> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nbr;
    int indeg = 0;
    for (int j = 0; j < n; ++j) {
      if (g.edge(v, j)) nbr.push_back(degree[j]);
      if (g.edge(j, v)) ++indeg;
    }
    std::sort(nbr.begin(), nbr.end());
    keys[v] = std::to_string(degree[v]) + "/" + std::to_string(indeg) + ":";
    for (int d : nbr) keys[v] += std::to_string(d) + ",";
  }
  auto compatible = [&](int v, int c, int u, int cu) {
    return g.edge(v, u) == g.edge(c, cu) && g.edge(u, v) == g.edge(cu, c);
  };
  return enumerate(n, classes_from_keys(keys), compatible, "graph");
}

std::vector<PermutationSolution> enumerate_tree_diagram_automorphisms(const TreeDiagram& t, int n,
                                                                      int size_cap) {
  const FiniteGraph g = truncate(t, n);
  std::vector<int> level_of;
  for (int j = 0; j <= n; ++j)
    for (int v = 0; v < t.levels[j]; ++v) level_of.push_back(j);

  auto all = enumerate_graph_automorphisms(g, size_cap);
  std::vector<PermutationSolution> out;
  for (auto& s : all) {
    bool level_preserving = true;
    for (std::size_t v = 0; v < s.perm.size() && level_preserving; ++v)
      level_preserving = level_of[v] == level_of[s.perm[v]];
    if (level_preserving) {
      s.source = "tree";
      out.push_back(std::move(s));
    }
  }
  return out;
}

GroupSummary group_order_and_orbits(const std::vector<PermutationSolution>& sols) {
  if (sols.empty()) throw DomainError("empty solution set");
  const int n = static_cast<int>(sols[0].perm.size());

  std::vector<std::vector<int>> set;
  for (const auto& s : sols) set.push_back(s.perm);
  std::sort(set.begin(), set.end());
  for (const auto& a : sols)
    for (const auto& b : sols) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = b.perm[a.perm[i]];
      if (!std::binary_search(set.begin(), set.end(), ab))
        throw DomainError("solution set not closed under composition");
    }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& s : sols)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(s.perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  GroupSummary out;
  out.order = static_cast<long>(sols.size());
  for (auto& [root, members] : groups) out.orbits.push_back(std::move(members));
  return out;
}

std::string permutation_text(const std::vector<int>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm[i]);
  }
  return out;
}

}  // namespace qsym
