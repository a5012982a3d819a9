#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsymkit/abelian.hpp"
#include "qsymkit/builders.hpp"
#include "qsymkit/errors.hpp"
#include "qsymkit/positivity.hpp"
#include "qsymkit/rewrite.hpp"

using namespace qsym;

namespace {

GeneratorSetPtr projections(const std::vector<std::string>& names) {
  std::vector<GeneratorSymbol> gens;
  for (const auto& n : names) gens.push_back({static_cast<int>(gens.size()), n, true});
  return make_generators(gens);
}

NCPolynomial random_polynomial(GeneratorSetPtr gens, std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), len(0, 3), coeff(-3, 3),
      gen(0, gens->size() - 1);
  NCPolynomial p(gens);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Word w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) {
      const int g = gen(rng);
      const bool star = !gens->at(g).selfadjoint && (rng() & 1);
      w.push_back(Letter{g, star});
    }
    p.add_term(w, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("multiplication identities") {
  auto gens = projections({"p", "q1"});
  const auto one = NCPolynomial::constant(gens, 1);
  const auto p = NCPolynomial::generator(gens, 0);
  CHECK(one * p == p);
  CHECK(p * one == p);

  auto magic = magic_unitary_presentation(2);
  const auto q11 = NCPolynomial::generator(magic.gens, 0);
  const auto q12 = NCPolynomial::generator(magic.gens, 1);
  const auto prod = q11 * q12;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.leading_word() == Word{Letter{0, false}, Letter{1, false}});
  CHECK(prod.leading_coefficient() == 1);

  // (p - q1)^2 expands to four terms before reduction.
  const auto q1 = NCPolynomial::generator(gens, 1);
  const auto square = (p - q1) * (p - q1);
  CHECK(square.terms().size() == 4);
  const auto expected = p * p - p * q1 - q1 * p + q1 * q1;
  CHECK(square == expected);
}

TEST_CASE("star is an antimultiplicative involution") {
  std::vector<GeneratorSymbol> symbols{{0, "q11", true}, {1, "q22", true}, {2, "z", false}};
  auto gens = make_generators(symbols);
  const auto q11 = NCPolynomial::generator(gens, 0);
  const auto q22 = NCPolynomial::generator(gens, 1);
  const auto z = NCPolynomial::generator(gens, 2);

  CHECK((q11 * q22).star() == q22 * q11);
  CHECK(z.star() == NCPolynomial::generator(gens, 2, true));
  const auto p = NCPolynomial::generator(gens, 0) + 2 * (q11 * q22);
  CHECK(p.star() == q11 + 2 * (q22 * q11));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_polynomial(gens, rng);
    const auto b = random_polynomial(gens, rng);
    CHECK(a.star().star() == a);
    CHECK((a * b).star() == b.star() * a.star());
  }
}

TEST_CASE("ring axioms hold exactly") {
  auto gens = projections({"a", "b", "c"});
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_polynomial(gens, rng);
    const auto b = random_polynomial(gens, rng);
    const auto c = random_polynomial(gens, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("universe mismatch is rejected") {
  auto g1 = projections({"a"});
  auto g2 = projections({"b"});
  const auto a = NCPolynomial::generator(g1, 0);
  const auto b = NCPolynomial::generator(g2, 0);
  CHECK_THROWS_AS(a * b, DomainError);
  CHECK_THROWS_AS(a + b, DomainError);
}

TEST_CASE("reduce handles the worked examples") {
  auto magic = magic_unitary_presentation(2);
  const auto q11 = NCPolynomial::generator(magic.gens, 0);
  const auto q12 = NCPolynomial::generator(magic.gens, 1);
  CHECK(reduce(q11 * q12, magic.relations, 4).is_zero);

  auto gens = projections({"p"});
  const auto p = NCPolynomial::generator(gens, 0);
  RelationSet idem = canonicalize_relations({p * p - p});
  CHECK(reduce(p * p - p, idem, 2).is_zero);

  // q1 <= p: p - q1 is again a projection.
  auto sub = projections({"p", "q1"});
  const auto sp = NCPolynomial::generator(sub, 0);
  const auto sq = NCPolynomial::generator(sub, 1);
  RelationSet rels = canonicalize_relations(
      {sp * sp - sp, sq * sq - sq, sp * sq - sq, sq * sp - sq});
  const auto diff = sp - sq;
  const auto result = reduce(diff * diff, rels, 4);
  CHECK(result.normal_form == diff);
  CHECK_FALSE(result.is_zero);
}

TEST_CASE("reduce is idempotent") {
  auto magic = magic_unitary_presentation(3);
  Rewriter engine(magic.gens, magic.relations, 4);
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_polynomial(magic.gens, rng);
    const auto once = engine.reduce(p).normal_form;
    CHECK(engine.reduce(once).normal_form == once);
  }
}

TEST_CASE("commutator probes") {
  // Declared-commutative pair.
  auto gens = projections({"a", "b"});
  const auto a = NCPolynomial::generator(gens, 0);
  const auto b = NCPolynomial::generator(gens, 1);
  Presentation comm;
  comm.gens = gens;
  comm.relations = canonicalize_relations({a * a - a, b * b - b, a * b - b * a});
  CHECK(proves_commutator_zero(0, 1, comm, 4) == TriState::Yes);

  // Subordination q1 <= p forces commutation.
  Presentation sub;
  sub.gens = projections({"p", "q1"});
  const auto sp = NCPolynomial::generator(sub.gens, 0);
  const auto sq = NCPolynomial::generator(sub.gens, 1);
  sub.relations =
      canonicalize_relations({sp * sp - sp, sq * sq - sq, sp * sq - sq, sq * sp - sq});
  CHECK(proves_commutator_zero(0, 1, sub, 4) == TriState::Yes);

  // Free subprojections of p stay unknown at any bound; the witness model
  // supplies the refutation.
  auto cantor = cantor_level_presentation(2, CantorForm::Reduced);
  const int q1 = cantor.gens->id_of("q1");
  const int q4 = cantor.gens->id_of("q4");
  CHECK(proves_commutator_zero(q1, q4, cantor, 4) == TriState::Unknown);
  CHECK(proves_commutator_zero(q1, q4, cantor, 6) == TriState::Unknown);
}

TEST_CASE("positivity simplification") {
  std::vector<GeneratorSymbol> symbols{{0, "q0", false}};
  auto gens = make_generators(symbols);
  const auto q0 = NCPolynomial::generator(gens, 0);
  const auto q0s = NCPolynomial::generator(gens, 0, true);

  RelationSet in = canonicalize_relations({q0 * q0s + q0s * q0});
  RelationSet out = positivity_simplify(in);
  REQUIRE(out.relations.size() == 1);
  CHECK(out.relations[0] == q0);

  auto sa = projections({"qn"});
  const auto qn = NCPolynomial::generator(sa, 0);
  RelationSet sq = positivity_simplify(canonicalize_relations({qn * qn}));
  REQUIRE(sq.relations.size() == 1);
  CHECK(sq.relations[0] == qn);

  auto pp = projections({"p"});
  const auto p = NCPolynomial::generator(pp, 0);
  RelationSet idem = canonicalize_relations({p * p - p});
  CHECK(positivity_simplify(idem).relations == idem.relations);
}

TEST_CASE("canonical text") {
  auto magic = magic_unitary_presentation(2);
  const auto q11 = NCPolynomial::generator(magic.gens, 0);
  const auto q12 = NCPolynomial::generator(magic.gens, 1);
  CHECK((q11 * q12 - q11).text() == "q_1_1 q_1_2 - q_1_1");
  CHECK((NCPolynomial::constant(magic.gens, Rational(4, 3)) * q11).text() == "4/3 q_1_1");
  CHECK(NCPolynomial(magic.gens).text() == "0");
  CHECK((-q11 + q12).text() == "q_1_2 - q_1_1");
  CHECK((q11 - q12).text() == "-q_1_2 + q_1_1");
}
