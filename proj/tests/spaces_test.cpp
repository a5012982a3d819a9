#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymkit/classical.hpp"
#include "qsymkit/errors.hpp"
#include "qsymkit/spaces.hpp"

using namespace qsym;

namespace {

FiniteMetricSpace two_points() { return make_metric_space({{0, 1}, {1, 0}}); }

FiniteMetricSpace equilateral(int n) {
  std::vector<std::vector<Rational>> sq(n, std::vector<Rational>(n, 1));
  for (int i = 0; i < n; ++i) sq[i][i] = 0;
  return make_metric_space(sq);
}

FiniteMetricSpace unit_square() {
  return make_metric_space({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
}

}  // namespace

TEST_CASE("laplacian exact values") {
  const auto l2 = laplacian(two_points());
  CHECK(l2[0][0] == Rational(-4, 3));
  CHECK(l2[0][1] == Rational(4, 3));
  CHECK(l2[1][0] == Rational(4, 3));
  CHECK(l2[1][1] == Rational(-4, 3));

  const auto l3 = laplacian(equilateral(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l3[i][j] == (i == j ? Rational(-8, 5) : Rational(4, 5)));

  CHECK_THROWS_AS(laplacian(make_metric_space({{0}})), DomainError);
}

TEST_CASE("doubling all distances quarters the laplacian") {
  const auto x = unit_square();
  auto sq = x.sqdist;
  for (auto& row : sq)
    for (auto& v : row) v *= 4;  // distances doubled, squares quadrupled
  const auto l = laplacian(x);
  const auto l4 = laplacian(make_metric_space(sq));
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) CHECK(l4[i][j] * 4 == l[i][j]);
}

TEST_CASE("laplacian rows vanish and commute with isometries") {
  for (const auto& x : {two_points(), equilateral(3), unit_square(),
                        make_metric_space({{0, 1, 4}, {1, 0, 9}, {4, 9, 0}})}) {
    const auto l = laplacian(x);
    for (int i = 0; i < x.n; ++i) {
      Rational sum = 0;
      for (int j = 0; j < x.n; ++j) {
        sum += l[i][j];
        CHECK(l[i][j] == l[j][i]);
      }
      CHECK(sum == 0);
    }
    for (const auto& s : enumerate_metric_automorphisms(x))
      for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) CHECK(l[s.perm[i]][s.perm[j]] == l[i][j]);
  }
}

TEST_CASE("metric space validation") {
  CHECK_THROWS_AS(make_metric_space({{0, 1}, {2, 0}}), DomainError);
  CHECK_THROWS_AS(make_metric_space({{1, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make_metric_space({{0, 0}, {0, 0}}), DomainError);

  // d(0,2) = 3 > 1 + 1: a violation is reported, not an error.
  const auto x = make_metric_space({{0, 1, 9}, {1, 0, 1}, {9, 1, 0}});
  CHECK_FALSE(x.triangle_violations().empty());
  CHECK(unit_square().triangle_violations().empty());
}

TEST_CASE("graph metric and the finite/infinite partition") {
  auto k3 = make_graph({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, false);
  const auto mk3 = graph_to_metric(k3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(mk3.finite[i][j]);
      if (i != j) CHECK(mk3.sqdist[i][j] == 1);
    }

  auto path = make_graph({"a", "b", "c"}, {{0, 1}}, false);
  const auto mp = graph_to_metric(path);
  CHECK(mp.finite[0][1]);
  CHECK(mp.sqdist[0][1] == 1);
  CHECK_FALSE(mp.finite[0][2]);
  CHECK_FALSE(mp.finite[1][2]);

  auto empty = make_graph({"a", "b"}, {}, false);
  CHECK_FALSE(graph_to_metric(empty).finite[0][1]);

  auto directed = make_graph({"a", "b"}, {{0, 1}}, true);
  CHECK_THROWS_AS(graph_to_metric(directed), DomainError);
  CHECK_THROWS_AS(make_graph({"a"}, {{0, 0}}, false), DomainError);
}

TEST_CASE("truncation of tree diagrams") {
  const auto binary = uniform_tree_diagram(2, 2);
  const auto g1 = truncate(binary, 1);
  CHECK(g1.size() == 3);
  const auto g2 = truncate(binary, 2);
  CHECK(g2.size() == 7);

  const auto chain = chain_diagram(4);
  for (int n = 1; n <= 4; ++n) CHECK(truncate(chain, n).size() == n + 1);

  // Always a tree: |edges| = |vertices| - 1 and connected.
  for (const auto& g : {g1, g2, truncate(chain, 4), truncate(uniform_tree_diagram(3, 2), 2)}) {
    int edges = 0;
    std::vector<int> seen{0};
    std::vector<bool> visited(g.size(), false);
    visited[0] = true;
    while (!seen.empty()) {
      const int v = seen.back();
      seen.pop_back();
      for (int w = 0; w < g.size(); ++w)
        if (g.edge(v, w) && !visited[w]) {
          visited[w] = true;
          seen.push_back(w);
        }
    }
    for (int a = 0; a < g.size(); ++a) {
      CHECK(visited[a]);
      for (int b = a + 1; b < g.size(); ++b) edges += g.edge(a, b) ? 1 : 0;
    }
    CHECK(edges == g.size() - 1);
  }
  CHECK_THROWS_AS(truncate(binary, 3), DomainError);
}

TEST_CASE("tree diagram validation") {
  CHECK_THROWS_AS(make_tree_diagram({2}, {}), DomainError);
  // Non-surjective parent map.
  CHECK_THROWS_AS(make_tree_diagram({1, 2, 2}, {{0, 0}, {0, 0}}), DomainError);
  const auto mixed = make_tree_diagram({1, 2, 5}, {{0, 0}, {0, 0, 0, 1, 1}});
  CHECK(mixed.children(2, 0) == std::vector<int>{0, 1, 2});
  CHECK(mixed.children(2, 1) == std::vector<int>{3, 4});
}

TEST_CASE("matrix text") {
  CHECK(matrix_text(laplacian(two_points())) == "(-4/3 4/3 / 4/3 -4/3)");
}
