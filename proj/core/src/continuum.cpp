#include "qsymkit/continuum.hpp"

#include "qsymkit/errors.hpp"
#include "qsymkit/positivity.hpp"
#include "qsymkit/rewrite.hpp"

namespace qsym {

GeneratingSeries make_series(SeriesKind kind, int degree) {
  if (degree < 2) throw DomainError("series truncation needs N >= 2");
  std::vector<GeneratorSymbol> symbols;
  const bool selfadjoint = kind == SeriesKind::Interval;
  for (int n = 0; n <= degree; ++n)
    symbols.push_back({static_cast<int>(symbols.size()), "q" + std::to_string(n), selfadjoint});
  if (kind == SeriesKind::Circle)
    for (int n = 1; n <= degree; ++n)
      symbols.push_back({static_cast<int>(symbols.size()), "qp" + std::to_string(n), false});
  return GeneratingSeries{kind, degree, make_generators(std::move(symbols))};
}

namespace {

std::vector<CoefficientRelation> interval_relations(const GeneratingSeries& s) {
  const int n = s.degree;
  auto q = [&](int k) { return NCPolynomial::generator(s.gens, k); };
  // Coefficient of T^k in alpha(T^2) = alpha(T)^2.
  std::vector<NCPolynomial> square(2 * n + 1, NCPolynomial(s.gens));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) square[i + j] += q(i) * q(j);

  std::vector<CoefficientRelation> out;
  for (int m = 0; m <= n - 1; ++m)
    for (int k = 0; k <= n - 1; ++k) {
      // alpha^(2)(T^2 (x) 1 - 2 T (x) T + 1 (x) T^2) at T^m (x) T^k.
      NCPolynomial coeff(s.gens);
      if (k == 0) coeff += square[m];
      if (m == 0) coeff += square[k];
      coeff -= 2 * (q(m) * q(k));
      if (m == 2 && k == 0) coeff -= NCPolynomial::constant(s.gens, 1);
      if (m == 1 && k == 1) coeff += NCPolynomial::constant(s.gens, 2);
      if (m == 0 && k == 2) coeff -= NCPolynomial::constant(s.gens, 1);
      if (!coeff.is_zero()) out.push_back({m, k, std::move(coeff)});
    }
  return out;
}

std::vector<CoefficientRelation> circle_relations(const GeneratingSeries& s) {
  const int n = s.degree;
  // alpha(Z) coefficient at Z^k; negative k indexes the adjoint powers.
  auto zcoeff = [&](int k) {
    if (k >= 0) return NCPolynomial::generator(s.gens, k);
    return NCPolynomial::generator(s.gens, n - k);  // qp_{-k}
  };
  // alpha(Z*) = alpha(Z)*: coefficient at Z^l is the adjoint of the Z^{-l}
  // coefficient.
  auto zstarcoeff = [&](int l) { return zcoeff(-l).star(); };

  std::vector<CoefficientRelation> out;
  for (int k = -(n - 1); k <= n - 1; ++k)
    for (int l = -(n - 1); l <= n - 1; ++l) {
      // alpha^(2)(2 (x) 1 - Z (x) Z* - Z* (x) Z) at Z^k (x) Z^l.
      NCPolynomial coeff(s.gens);
      coeff -= zcoeff(k) * zstarcoeff(l);
      coeff -= zstarcoeff(k) * zcoeff(l);
      if (k == 0 && l == 0) coeff += NCPolynomial::constant(s.gens, 2);
      // d^2 (x) 1 contributes at (0,0), (1,-1) and (-1,1).
      if (k == 0 && l == 0) coeff -= NCPolynomial::constant(s.gens, 2);
      if (k == 1 && l == -1) coeff += NCPolynomial::constant(s.gens, 1);
      if (k == -1 && l == 1) coeff += NCPolynomial::constant(s.gens, 1);
      if (!coeff.is_zero()) out.push_back({k, l, std::move(coeff)});
    }
  return out;
}

}  // namespace

std::vector<CoefficientRelation> coefficient_relations(const GeneratingSeries& s) {
  return s.kind == SeriesKind::Interval ? interval_relations(s) : circle_relations(s);
}

RelationSet expand_isometry_relations(const GeneratingSeries& s) {
  std::vector<NCPolynomial> rels;
  for (auto& r : coefficient_relations(s)) rels.push_back(std::move(r.poly));
  return canonicalize_relations(std::move(rels));
}

RelationSet derive_conclusions(const RelationSet& relations, SeriesKind) {
  RelationSet current = positivity_simplify(relations);
  // Inter-reduce to a fixpoint: rewrite each relation by all the others.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<NCPolynomial> rels = current.relations;
    std::vector<NCPolynomial> next;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::vector<NCPolynomial> others;
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != i) others.push_back(rels[j]);
      Rewriter engine(rels[i].universe(), RelationSet{others}, rels[i].degree());
      NCPolynomial nf = engine.rewrite_only(rels[i]);
      if (!(nf == rels[i])) changed = true;
      if (!nf.is_zero()) next.push_back(std::move(nf));
    }
    current = canonicalize_relations(std::move(next));
  }
  // A relation and its adjoint cut out the same *-ideal; keep the smaller.
  std::vector<NCPolynomial> folded;
  for (const auto& r : current.relations) {
    const NCPolynomial s = r.star().monic();
    folded.push_back(NCPolynomial::compare(s, r) < 0 ? s : r);
  }
  return canonicalize_relations(std::move(folded));
}

}  // namespace qsym
