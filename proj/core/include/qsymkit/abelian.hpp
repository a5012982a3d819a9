#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsymkit/presentation.hpp"

namespace qsym {

// Commutative monomial: sorted (variable, exponent) pairs, exponents >= 1.
using CommMonomial = std::vector<std::pair<int, int>>;

class CommPolynomial {
 public:
  using TermMap = std::map<CommMonomial, Rational>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const CommMonomial& m, const Rational& c);

  std::string text(const GeneratorSet& gens) const;

 private:
  TermMap terms_;
};

// Maximal commutative quotient of a presentation with selfadjoint
// generators. Exponents of idempotent variables are collapsed to {0,1}.
struct CommutativePresentation {
  GeneratorSetPtr gens;
  std::vector<bool> idempotent;  // per generator: x^2 = x present in the source
  std::vector<CommPolynomial> relations;
};

CommutativePresentation abelianize(const Presentation& p);

// All {0,1} assignments satisfying every relation, by backtracking with unit
// propagation. Requires every generator idempotent. Sorted lexicographically.
std::vector<std::vector<int>> zero_one_solutions(const CommutativePresentation& c);

// Classical solutions of a presentation: {0,1} points of its abelianization.
std::vector<std::vector<int>> classical_solutions(const Presentation& p);

// Evaluates each block of p at a {0,1} assignment; every block of a
// classical solution is a permutation matrix. Throws when an entry is not
// {0,1} or a block row is not a point mass.
std::vector<std::vector<int>> block_permutations(const Presentation& p,
                                                 const std::vector<int>& assignment);

// Canonical signature of a classical solution through the block structure;
// two presentations with matching block shapes can compare solution sets by
// these strings.
std::string solution_signature(const Presentation& p, const std::vector<int>& assignment);

std::string commutative_presentation_text(const CommutativePresentation& c);

}  // namespace qsym
