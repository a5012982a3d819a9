#include "qsymkit/rewrite.hpp"

#include <algorithm>

#include "qsymkit/errors.hpp"

namespace qsym {

namespace {

// Extension fixpoints stay far below these in practice; the caps keep the
// construction total on presentations whose monomial space is huge.
constexpr long kMonomialCap = 2'000'000;
constexpr int kRowCap = 50'000;

long monomial_space_size(long letters, int bound) {
  long total = 1, pow = 1;
  for (int d = 1; d <= bound; ++d) {
    if (pow > kMonomialCap / std::max(letters, 1L)) return kMonomialCap + 1;
    pow *= letters;
    total += pow;
    if (total > kMonomialCap) return kMonomialCap + 1;
  }
  return total;
}

int letter_key(const Letter& l) { return l.gen * 2 + (l.star ? 1 : 0); }

}  // namespace

Rewriter::Rewriter(GeneratorSetPtr gens, const RelationSet& relations, int degree_bound)
    : gens_(std::move(gens)), bound_(degree_bound) {
  if (bound_ < 0) throw DomainError("negative degree bound");

  for (int g = 0; g < gens_->size(); ++g) {
    letters_.push_back(Letter{g, false});
    if (!gens_->at(g).selfadjoint) letters_.push_back(Letter{g, true});
  }

  // Star-closure: r = 0 implies r* = 0 in every *-algebra quotient.
  std::vector<NCPolynomial> seeds;
  for (const auto& r : relations.relations) {
    seeds.push_back(r);
    seeds.push_back(r.star());
  }
  seeds = canonicalize_relations(std::move(seeds)).relations;

  rules_by_first_.resize(static_cast<std::size_t>(gens_->size()) * 2);
  for (const auto& r : seeds) {
    if (r.degree() > bound_) {
      blocked_ = true;
      continue;
    }
    if (r.degree() == 0) throw DomainError("inconsistent relation set: nonzero constant relation");
    Rule rule{r.leading_word(), r};
    rules_by_first_[letter_key(rule.lhs.front())].push_back(static_cast<int>(rules_.size()));
    rules_.push_back(std::move(rule));
  }
  // At a given position the most specific (longest) rule fires first.
  for (auto& bucket : rules_by_first_)
    std::stable_sort(bucket.begin(), bucket.end(), [&](int a, int b) {
      return rules_[a].lhs.size() > rules_[b].lhs.size();
    });
  seeds_ = std::move(seeds);

  saturation_enabled_ =
      monomial_space_size(static_cast<long>(letters_.size()), bound_) <= kMonomialCap;
}

NCPolynomial Rewriter::rewrite_only(const NCPolynomial& p) const {
  NCPolynomial cur = p;
  bool changed = true;
  while (changed && !cur.is_zero()) {
    changed = false;
    // Largest reducible word first; leftmost position inside it.
    for (auto it = cur.terms().rbegin(); it != cur.terms().rend() && !changed; ++it) {
      const Word& w = it->first;
      const Rational coeff = it->second;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (int ridx : rules_by_first_[letter_key(w[pos])]) {
          const Rule& rule = rules_[ridx];
          if (rule.lhs.size() > w.size() - pos) continue;
          if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + pos)) continue;
          NCPolynomial left =
              NCPolynomial::monomial(gens_, Word(w.begin(), w.begin() + pos), coeff);
          NCPolynomial right = NCPolynomial::monomial(
              gens_, Word(w.begin() + pos + rule.lhs.size(), w.end()), 1);
          cur -= left * rule.relation * right;
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

NCPolynomial Rewriter::echelon_reduce(NCPolynomial p) const {
  while (!p.is_zero()) {
    bool reduced = false;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) continue;
      p -= rows_[pivot->second] * it->second;
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  return p;
}

void Rewriter::ensure_saturation() const {
  if (saturation_built_) return;
  saturation_built_ = true;
  std::deque<NCPolynomial> work;
  for (const auto& s : seeds_)
    if (s.degree() <= bound_) work.push_back(s);

  while (!work.empty()) {
    NCPolynomial nf = echelon_reduce(std::move(work.front()));
    work.pop_front();
    if (nf.is_zero()) continue;
    nf = nf.monic();
    const int deg = nf.degree();
    if (static_cast<int>(rows_.size()) >= kRowCap) {
      blocked_ = true;
      break;
    }
    pivots_.emplace(nf.leading_word(), static_cast<int>(rows_.size()));
    rows_.push_back(nf);
    if (deg == bound_) {
      blocked_ = true;  // letter extensions of this element exceed the bound
      continue;
    }
    for (const Letter& l : letters_) {
      const NCPolynomial lg = NCPolynomial::generator(gens_, l.gen, l.star);
      work.push_back(lg * rows_.back());
      work.push_back(rows_.back() * lg);
    }
  }
}

ReductionResult Rewriter::reduce(const NCPolynomial& p) const {
  if (p.degree() > bound_)
    throw DomainError("degree bound " + std::to_string(bound_) +
                      " below polynomial degree " + std::to_string(p.degree()));
  NCPolynomial nf = rewrite_only(p);
  if (nf.is_zero()) return {nf, true, true};
  if (!saturation_enabled_) return {nf, false, false};
  ensure_saturation();
  nf = echelon_reduce(std::move(nf));
  return {nf, nf.is_zero(), !blocked_};
}

ReductionResult reduce(const NCPolynomial& p, const RelationSet& relations, int degree_bound) {
  Rewriter engine(p.universe(), relations, degree_bound);
  return engine.reduce(p);
}

TriState proves_commutator_zero(int a, int b, const Presentation& p, int degree_bound) {
  if (a < 0 || a >= p.gens->size() || b < 0 || b >= p.gens->size())
    throw DomainError("generator id out of range");
  const NCPolynomial ga = NCPolynomial::generator(p.gens, a);
  const NCPolynomial gb = NCPolynomial::generator(p.gens, b);
  return reduce(ga * gb - gb * ga, p.relations, degree_bound).is_zero ? TriState::Yes
                                                                      : TriState::Unknown;
}

}  // namespace qsym
