#pragma once

#include <map>
#include <string>

#include "qsymkit/rational.hpp"
#include "qsymkit/word.hpp"

namespace qsym {

// Exact-rational linear combination of words in the generators of a fixed
// universe. Terms are kept in canonical degree-lexicographic order and never
// store zero coefficients, so equal polynomials serialize identically.
class NCPolynomial {
 public:
  using TermMap = std::map<Word, Rational, DegLexLess>;

  explicit NCPolynomial(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

  static NCPolynomial constant(GeneratorSetPtr gens, const Rational& c);
  static NCPolynomial generator(GeneratorSetPtr gens, int id, bool star = false);
  static NCPolynomial monomial(GeneratorSetPtr gens, Word w, const Rational& c = 1);

  const GeneratorSetPtr& universe() const { return gens_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : word_degree(terms_.rbegin()->first); }
  const Word& leading_word() const;
  const Rational& leading_coefficient() const;

  void add_term(const Word& w, const Rational& c);

  NCPolynomial operator+(const NCPolynomial& other) const;
  NCPolynomial operator-(const NCPolynomial& other) const;
  NCPolynomial operator*(const NCPolynomial& other) const;
  NCPolynomial operator*(const Rational& scalar) const;
  NCPolynomial operator-() const;
  NCPolynomial& operator+=(const NCPolynomial& other);
  NCPolynomial& operator-=(const NCPolynomial& other);

  bool operator==(const NCPolynomial& other) const { return terms_ == other.terms_; }

  // Antimultiplicative involution: words reversed, star flags flipped on
  // non-selfadjoint generators; rational coefficients are fixed.
  NCPolynomial star() const;

  // Divides by the leading coefficient; zero stays zero.
  NCPolynomial monic() const;

  // Degree <= 1 and every degree-one word unstarred.
  bool is_affine() const;

  // Substitutes scalar values for generators (star acts trivially on
  // rational scalars).
  Rational evaluate(const std::vector<Rational>& values) const;

  // Total order used to sort relation lists: leading terms first,
  // ties broken term by term.
  static int compare(const NCPolynomial& a, const NCPolynomial& b);

  std::string text() const;

 private:
  void check_universe(const NCPolynomial& other) const;

  GeneratorSetPtr gens_;
  TermMap terms_;
};

inline NCPolynomial operator*(const Rational& scalar, const NCPolynomial& p) { return p * scalar; }

}  // namespace qsym
