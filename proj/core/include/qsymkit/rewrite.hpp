#pragma once

#include <deque>
#include <vector>

#include "qsymkit/presentation.hpp"

namespace qsym {

struct ReductionResult {
  NCPolynomial normal_form;
  bool is_zero = false;
  // True when no reduction opportunity was cut off by the degree bound, i.e.
  // the normal form is exact for the full two-sided *-ideal.
  bool saturated = false;
};

enum class TriState { Yes, Unknown };

// Deterministic degree-bounded reduction modulo a relation set.
//
// Relations are star-closed, oriented by the canonical degree-lexicographic
// order (leading word -> lower terms) and applied leftmost-innermost as
// subword rewriting. Whatever remains is reduced against the linear basis of
// all context products u*r*v of degree <= degree_bound, built by letter
// extension to a fixpoint. Rewriting alone never raises degree; the bound
// governs the extension phase only. When the monomial space at the bound is
// too large to saturate, the extension phase is skipped and results carry
// saturated = false.
class Rewriter {
 public:
  Rewriter(GeneratorSetPtr gens, const RelationSet& relations, int degree_bound);

  // Requires degree_bound >= degree of p.
  ReductionResult reduce(const NCPolynomial& p) const;

  // Phase-1 normal form only (oriented subword rewriting).
  NCPolynomial rewrite_only(const NCPolynomial& p) const;

  int degree_bound() const { return bound_; }
  bool saturation_available() const { return saturation_enabled_; }

 private:
  struct Rule {
    Word lhs;
    NCPolynomial relation;  // monic, leading word == lhs
  };

  void ensure_saturation() const;
  NCPolynomial echelon_reduce(NCPolynomial p) const;

  GeneratorSetPtr gens_;
  int bound_;
  bool saturation_enabled_ = false;

  std::vector<NCPolynomial> seeds_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> rules_by_first_;  // indexed by letter key

  mutable bool blocked_ = false;
  mutable bool saturation_built_ = false;
  mutable std::vector<NCPolynomial> rows_;  // monic, pairwise distinct leading words
  mutable std::map<Word, int, DegLexLess> pivots_;

  std::vector<Letter> letters_;
};

ReductionResult reduce(const NCPolynomial& p, const RelationSet& relations, int degree_bound);

TriState proves_commutator_zero(int a, int b, const Presentation& p, int degree_bound);

}  // namespace qsym
