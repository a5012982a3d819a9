#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qsymkit/classical.hpp"
#include "qsymkit/errors.hpp"

using namespace qsym;

namespace {

// Independent oracle: filter all n! permutations, no pruning.
std::vector<std::vector<int>> naive_metric_automorphisms(const FiniteMetricSpace& x) {
  std::vector<int> perm(x.n);
  for (int i = 0; i < x.n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < x.n && ok; ++i)
      for (int j = 0; j < x.n && ok; ++j) ok = x.sqdist[perm[i]][perm[j]] == x.sqdist[i][j];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> naive_graph_automorphisms(const FiniteGraph& g) {
  std::vector<int> perm(g.size());
  for (int i = 0; i < g.size(); ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < g.size() && ok; ++a)
      for (int b = 0; b < g.size() && ok; ++b) ok = g.edge(perm[a], perm[b]) == g.edge(a, b);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> perms_of(const std::vector<PermutationSolution>& sols) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sols) out.push_back(s.perm);
  return out;
}

FiniteGraph complete_graph(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    v.push_back("v" + std::to_string(i));
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return make_graph(v, e, false);
}

FiniteGraph path_graph(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    v.push_back("v" + std::to_string(i));
    if (i) e.push_back({i - 1, i});
  }
  return make_graph(v, e, false);
}

}  // namespace

TEST_CASE("metric automorphisms match the naive oracle") {
  const auto two = make_metric_space({{0, 1}, {1, 0}});
  CHECK(perms_of(enumerate_metric_automorphisms(two)) == naive_metric_automorphisms(two));
  CHECK(enumerate_metric_automorphisms(two).size() == 2);

  const auto square =
      make_metric_space({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
  CHECK(perms_of(enumerate_metric_automorphisms(square)) == naive_metric_automorphisms(square));
  CHECK(enumerate_metric_automorphisms(square).size() == 8);

  const auto scalene = make_metric_space({{0, 1, 4}, {1, 0, 9}, {4, 9, 0}});
  CHECK(enumerate_metric_automorphisms(scalene).size() == 1);
  CHECK(enumerate_metric_automorphisms(scalene)[0].perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("graph automorphisms match the naive oracle") {
  long factorial = 1;
  for (int n = 2; n <= 5; ++n) {
    factorial *= n;
    CHECK(enumerate_graph_automorphisms(complete_graph(n)).size() == factorial);
  }
  const auto p3 = path_graph(3);
  CHECK(perms_of(enumerate_graph_automorphisms(p3)) == naive_graph_automorphisms(p3));
  CHECK(enumerate_graph_automorphisms(p3).size() == 2);

  const auto tree2 = truncate(uniform_tree_diagram(2, 2), 2);
  CHECK(perms_of(enumerate_graph_automorphisms(tree2)) == naive_graph_automorphisms(tree2));
  CHECK(enumerate_graph_automorphisms(tree2).size() == 8);
}

TEST_CASE("tree diagram automorphisms preserve levels") {
  // The path graph on 3 vertices has an end swap, but as a chain diagram the
  // levels pin every vertex.
  CHECK(enumerate_tree_diagram_automorphisms(chain_diagram(2), 2).size() == 1);
  CHECK(enumerate_tree_diagram_automorphisms(uniform_tree_diagram(2, 1), 1).size() == 2);
  CHECK(enumerate_tree_diagram_automorphisms(uniform_tree_diagram(2, 2), 2).size() == 8);
  CHECK(enumerate_tree_diagram_automorphisms(uniform_tree_diagram(2, 3), 3, 16).size() == 128);
  // Ternary depth 2: wreath product order 6 * 6^3.
  CHECK(enumerate_tree_diagram_automorphisms(uniform_tree_diagram(3, 2), 2, 16).size() == 1296);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(enumerate_graph_automorphisms(complete_graph(13)), DomainError);
  CHECK(enumerate_graph_automorphisms(complete_graph(5), 5).size() == 120);
}

TEST_CASE("group order and orbits") {
  const auto square =
      make_metric_space({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
  const auto sq = group_order_and_orbits(enumerate_metric_automorphisms(square));
  CHECK(sq.order == 8);
  REQUIRE(sq.orbits.size() == 1);
  CHECK(sq.orbits[0] == std::vector<int>{0, 1, 2, 3});

  const auto scalene = make_metric_space({{0, 1, 4}, {1, 0, 9}, {4, 9, 0}});
  const auto sc = group_order_and_orbits(enumerate_metric_automorphisms(scalene));
  CHECK(sc.order == 1);
  CHECK(sc.orbits.size() == 3);

  const std::vector<PermutationSolution> id_only{{{0, 1, 2}, "test"}};
  CHECK(group_order_and_orbits(id_only).order == 1);

  // A set missing the composite of its elements is rejected.
  const std::vector<PermutationSolution> broken{{{0, 1, 2}, "test"}, {{1, 2, 0}, "test"}};
  CHECK_THROWS_AS(group_order_and_orbits(broken), DomainError);
}

TEST_CASE("closure of enumerated groups") {
  for (const auto& g : {complete_graph(4), path_graph(4), truncate(uniform_tree_diagram(2, 2), 2)}) {
    const auto sols = enumerate_graph_automorphisms(g);
    CHECK_NOTHROW(group_order_and_orbits(sols));
    // Identity present and inverses in the set.
    std::vector<int> id(g.size());
    for (int i = 0; i < g.size(); ++i) id[i] = i;
    const auto perms = perms_of(sols);
    CHECK(std::find(perms.begin(), perms.end(), id) != perms.end());
    for (const auto& p : perms) {
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
      CHECK(std::find(perms.begin(), perms.end(), inv) != perms.end());
    }
  }
}

TEST_CASE("one-line notation") {
  CHECK(permutation_text({1, 0, 2}) == "1 0 2");
}
