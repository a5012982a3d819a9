#pragma once

#include <vector>

#include "qsymkit/presentation.hpp"

namespace qsym {

enum class SeriesKind { Interval, Circle };

// Truncated expansion of an isometric action on the interval (polynomial
// series, selfadjoint coefficients q0..qN) or the circle (Laurent series,
// non-selfadjoint q0..qN and qp1..qpN for the adjoint powers).
struct GeneratingSeries {
  SeriesKind kind = SeriesKind::Interval;
  int degree = 0;  // truncation bound N
  GeneratorSetPtr gens;
};

GeneratingSeries make_series(SeriesKind kind, int degree);  // requires N >= 2

// One coefficient comparison: the relation attached to the basis monomial
// pair (left, right). Interval pairs are (m, n) with T^m (x) T^n; circle
// pairs are (k, l) with Z^k (x) Z^l, negative exponents meaning adjoints.
struct CoefficientRelation {
  int left = 0;
  int right = 0;
  NCPolynomial poly;
};

// Collects the coefficient of alpha^(2)(d^2) - d^2 (x) 1 at every basis
// monomial pair unaffected by the truncation (component exponents of modulus
// <= N-1), so every emitted relation is exact for the untruncated series.
std::vector<CoefficientRelation> coefficient_relations(const GeneratingSeries& s);

RelationSet expand_isometry_relations(const GeneratingSeries& s);

// positivity_simplify followed by inter-reduction; for the interval the
// result contains q_n = 0 (2 <= n <= N-1) and q_1^2 = 1, for the circle
// q_0 = 0 and q_n = q'_n = 0 (2 <= n <= N-1).
RelationSet derive_conclusions(const RelationSet& relations, SeriesKind kind);

}  // namespace qsym
