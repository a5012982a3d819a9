#include "qsymkit/polynomial.hpp"

#include "qsymkit/errors.hpp"

namespace qsym {

NCPolynomial NCPolynomial::constant(GeneratorSetPtr gens, const Rational& c) {
  NCPolynomial p(std::move(gens));
  p.add_term({}, c);
  return p;
}

NCPolynomial NCPolynomial::generator(GeneratorSetPtr gens, int id, bool star) {
  if (id < 0 || id >= gens->size()) throw DomainError("generator id out of range");
  if (star && gens->at(id).selfadjoint)
    throw DomainError("star flag on selfadjoint generator '" + gens->at(id).name + "'");
  NCPolynomial p(std::move(gens));
  p.add_term({Letter{id, star}}, 1);
  return p;
}

NCPolynomial NCPolynomial::monomial(GeneratorSetPtr gens, Word w, const Rational& c) {
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= gens->size()) throw DomainError("generator id out of range");
    if (l.star && gens->at(l.gen).selfadjoint)
      throw DomainError("star flag on selfadjoint generator '" + gens->at(l.gen).name + "'");
  }
  NCPolynomial p(std::move(gens));
  p.add_term(w, c);
  return p;
}

const Word& NCPolynomial::leading_word() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& NCPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void NCPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NCPolynomial::check_universe(const NCPolynomial& other) const {
  if (gens_.get() == other.gens_.get()) return;
  if (gens_ && other.gens_ && *gens_ == *other.gens_) return;
  throw DomainError("generator-universe mismatch");
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& other) const {
  NCPolynomial out = *this;
  out += other;
  return out;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& other) const {
  NCPolynomial out = *this;
  out -= other;
  return out;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
  check_universe(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
  check_universe(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& other) const {
  check_universe(other);
  NCPolynomial out(gens_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : other.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPolynomial NCPolynomial::operator*(const Rational& scalar) const {
  NCPolynomial out(gens_);
  if (scalar == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scalar);
  return out;
}

NCPolynomial NCPolynomial::operator-() const { return *this * Rational(-1); }

NCPolynomial NCPolynomial::star() const {
  NCPolynomial out(gens_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(star_word(w, *gens_), c);
  return out;
}

NCPolynomial NCPolynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / leading_coefficient());
}

bool NCPolynomial::is_affine() const {
  for (const auto& [w, c] : terms_) {
    if (w.size() > 1) return false;
    if (w.size() == 1 && w[0].star) return false;
  }
  return true;
}

Rational NCPolynomial::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != gens_->size())
    throw DomainError("evaluation vector size mismatch");
  Rational total = 0;
  for (const auto& [w, c] : terms_) {
    Rational v = c;
    for (const Letter& l : w) v *= values[l.gen];
    total += v;
  }
  return total;
}

int NCPolynomial::compare(const NCPolynomial& a, const NCPolynomial& b) {
  auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
  DegLexLess less;
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    const int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.rend()) return 1;
  if (ib != b.terms_.rend()) return -1;
  return 0;
}

std::string NCPolynomial::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational c = abs(it->second);
    const bool negative = it->second < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (it->first.empty()) {
      out += rational_text(c);
    } else {
      if (c != 1) {
        out += rational_text(c);
        out += ' ';
      }
      out += word_text(it->first, *gens_);
    }
  }
  return out;
}

}  // namespace qsym
