#include "qsymkit/positivity.hpp"

#include <algorithm>
#include <optional>

namespace qsym {

namespace {

// If w == u u* returns u, otherwise nothing.
std::optional<Word> split_w_wstar(const Word& w, const GeneratorSet& gens) {
  if (w.empty() || w.size() % 2 != 0) return std::nullopt;
  const Word head(w.begin(), w.begin() + w.size() / 2);
  const Word tail(w.begin() + w.size() / 2, w.end());
  if (tail == star_word(head, gens)) return head;
  return std::nullopt;
}

Word star_canonical(const Word& w, const GeneratorSet& gens) {
  Word s = star_word(w, gens);
  return DegLexLess{}(s, w) ? s : w;
}

}  // namespace

RelationSet positivity_simplify(const RelationSet& relations) {
  std::vector<NCPolynomial> current = relations.relations;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<NCPolynomial> next;
    for (const auto& rel : current) {
      const auto& gens = *rel.universe();
      std::vector<Word> factors;
      bool decomposable = !rel.is_zero();
      for (const auto& [w, c] : rel.terms()) {
        auto u = c > 0 ? split_w_wstar(w, gens) : std::nullopt;
        if (!u) {
          decomposable = false;
          break;
        }
        factors.push_back(star_canonical(*u, gens));
      }
      if (!decomposable) {
        next.push_back(rel);
        continue;
      }
      for (const auto& u : factors) {
        NCPolynomial derived = NCPolynomial::monomial(rel.universe(), u, 1);
        if (!(derived == rel)) changed = true;
        next.push_back(std::move(derived));
      }
    }
    current = canonicalize_relations(std::move(next)).relations;
  }
  return RelationSet{std::move(current)};
}

}  // namespace qsym
