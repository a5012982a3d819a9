#include "qsymkit/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "qsymkit/errors.hpp"

namespace qsym {

void CommPolynomial::add_term(const CommMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string CommPolynomial::text(const GeneratorSet& gens) const {
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
      bool inner_first = true;
      for (const auto& [var, exp] : it->first) {
        if (!inner_first) out += ' ';
        inner_first = false;
        out += gens.at(var).name;
        if (exp > 1) out += "^" + std::to_string(exp);
      }
    }
  }
  return out;
}

namespace {

CommMonomial abelianize_word(const Word& w, const std::vector<bool>& idempotent) {
  std::map<int, int> exps;
  for (const Letter& l : w) exps[l.gen] += 1;
  CommMonomial m;
  m.reserve(exps.size());
  for (auto& [var, exp] : exps) m.emplace_back(var, idempotent[var] ? 1 : exp);
  return m;
}

bool is_idempotency_relation(const NCPolynomial& r, int* var) {
  if (r.terms().size() != 2) return false;
  auto hi = r.terms().rbegin();
  auto lo = r.terms().begin();
  if (hi->first.size() != 2 || lo->first.size() != 1) return false;
  if (hi->first[0] != hi->first[1] || hi->first[0] != lo->first[0]) return false;
  if (hi->second != 1 || lo->second != -1) return false;
  *var = hi->first[0].gen;
  return true;
}

}  // namespace

CommutativePresentation abelianize(const Presentation& p) {
  for (const auto& g : p.gens->all())
    if (!g.selfadjoint)
      throw DomainError("abelianize requires selfadjoint generators (got '" + g.name + "')");

  CommutativePresentation out;
  out.gens = p.gens;
  out.idempotent.assign(p.gens->size(), false);
  for (const auto& r : p.relations.relations) {
    int var = -1;
    if (is_idempotency_relation(r, &var)) out.idempotent[var] = true;
  }

  std::vector<CommPolynomial> rels;
  for (const auto& r : p.relations.relations) {
    CommPolynomial cp;
    for (const auto& [w, c] : r.terms()) cp.add_term(abelianize_word(w, out.idempotent), c);
    if (!cp.is_zero()) rels.push_back(std::move(cp));
  }
  std::sort(rels.begin(), rels.end(),
            [](const CommPolynomial& a, const CommPolynomial& b) { return a.terms() < b.terms(); });
  rels.erase(std::unique(rels.begin(), rels.end(),
                         [](const CommPolynomial& a, const CommPolynomial& b) {
                           return a.terms() == b.terms();
                         }),
             rels.end());
  out.relations = std::move(rels);
  return out;
}

namespace {

// One relation, preprocessed for the {0,1} solver.
struct SolverRelation {
  std::vector<std::vector<int>> monomials;  // variable lists
  std::vector<Rational> coefficients;
  Rational constant = 0;
};

class ZeroOneSearch {
 public:
  ZeroOneSearch(const CommutativePresentation& c) : gens_(c.gens->size()) {
    for (const auto& rel : c.relations) {
      SolverRelation sr;
      for (const auto& [m, coeff] : rel.terms()) {
        if (m.empty()) {
          sr.constant += coeff;
          continue;
        }
        std::vector<int> vars;
        for (const auto& [var, exp] : m) vars.push_back(var);
        sr.monomials.push_back(std::move(vars));
        sr.coefficients.push_back(coeff);
      }
      relations_.push_back(std::move(sr));
    }
    occurrences_.resize(gens_);
    for (std::size_t i = 0; i < relations_.size(); ++i)
      for (const auto& m : relations_[i].monomials)
        for (int v : m) occurrences_[v].push_back(static_cast<int>(i));
    for (auto& occ : occurrences_) {
      std::sort(occ.begin(), occ.end());
      occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    }
    values_.assign(gens_, -1);
  }

  std::vector<std::vector<int>> run() {
    for (const auto& rel : relations_)
      if (rel.monomials.empty() && rel.constant != 0) return {};
    search(0);
    std::sort(solutions_.begin(), solutions_.end());
    return solutions_;
  }

 private:
  // Partial evaluation. Returns false on a definite conflict; collects
  // forced assignments (var, value).
  bool examine(const SolverRelation& rel, std::vector<std::pair<int, int>>* forced) const {
    Rational acc = rel.constant;
    Rational min_extra = 0, max_extra = 0;
    std::vector<int> alive;  // indices of undetermined monomials
    std::vector<int> alive_unassigned_var;
    for (std::size_t i = 0; i < rel.monomials.size(); ++i) {
      int unassigned = -1;
      bool dead = false;
      bool single = true;
      for (int v : rel.monomials[i]) {
        if (values_[v] == 0) {
          dead = true;
          break;
        }
        if (values_[v] == -1) {
          if (unassigned != -1) single = false;
          unassigned = v;
        }
      }
      if (dead) continue;
      if (unassigned == -1) {
        acc += rel.coefficients[i];
        continue;
      }
      alive.push_back(static_cast<int>(i));
      alive_unassigned_var.push_back(single ? unassigned : -1);
      if (rel.coefficients[i] > 0)
        max_extra += rel.coefficients[i];
      else
        min_extra += rel.coefficients[i];
    }
    if (alive.empty()) return acc == 0;
    if (acc + min_extra > 0 || acc + max_extra < 0) return false;
    if (alive.size() == 1) {
      const Rational coeff = rel.coefficients[alive[0]];
      const Rational target = -acc / coeff;  // value the alive monomial must take
      if (target == 1) {
        for (int v : rel.monomials[alive[0]])
          if (values_[v] == -1) forced->emplace_back(v, 1);
      } else if (target == 0) {
        if (alive_unassigned_var[0] != -1) forced->emplace_back(alive_unassigned_var[0], 0);
      } else {
        return false;
      }
      return true;
    }
    // All alive monomials share one sign and the assigned part balances:
    // each must vanish.
    if (acc == 0 && (min_extra == 0 || max_extra == 0)) {
      for (std::size_t k = 0; k < alive.size(); ++k)
        if (alive_unassigned_var[k] != -1) forced->emplace_back(alive_unassigned_var[k], 0);
    }
    return true;
  }

  bool assign(int var, int value, std::vector<int>* trail) {
    std::vector<std::pair<int, int>> queue{{var, value}};
    while (!queue.empty()) {
      auto [v, val] = queue.back();
      queue.pop_back();
      if (values_[v] != -1) {
        if (values_[v] != val) return false;
        continue;
      }
      values_[v] = val;
      trail->push_back(v);
      for (int rel_idx : occurrences_[v]) {
        std::vector<std::pair<int, int>> forced;
        if (!examine(relations_[rel_idx], &forced)) return false;
        for (auto& f : forced) queue.push_back(f);
      }
    }
    return true;
  }

  void search(int from) {
    int var = -1;
    for (int v = from; v < gens_; ++v)
      if (values_[v] == -1) {
        var = v;
        break;
      }
    if (var == -1) {
      std::vector<int> sol(values_.begin(), values_.end());
      if (consistent()) solutions_.push_back(std::move(sol));
      return;
    }
    for (int value : {1, 0}) {
      std::vector<int> trail;
      if (assign(var, value, &trail)) search(var + 1);
      for (int v : trail) values_[v] = -1;
    }
  }

  bool consistent() const {
    for (const auto& rel : relations_) {
      Rational acc = rel.constant;
      for (std::size_t i = 0; i < rel.monomials.size(); ++i) {
        bool on = true;
        for (int v : rel.monomials[i])
          if (values_[v] != 1) {
            on = false;
            break;
          }
        if (on) acc += rel.coefficients[i];
      }
      if (acc != 0) return false;
    }
    return true;
  }

  int gens_;
  std::vector<SolverRelation> relations_;
  std::vector<std::vector<int>> occurrences_;
  std::vector<signed char> values_;
  std::vector<std::vector<int>> solutions_;
};

}  // namespace

std::vector<std::vector<int>> zero_one_solutions(const CommutativePresentation& c) {
  for (int v = 0; v < c.gens->size(); ++v)
    if (!c.idempotent[v])
      throw DomainError("zero_one_solutions requires idempotent generators (got '" +
                        c.gens->at(v).name + "')");
  return ZeroOneSearch(c).run();
}

std::vector<std::vector<int>> classical_solutions(const Presentation& p) {
  return zero_one_solutions(abelianize(p));
}

std::vector<std::vector<int>> block_permutations(const Presentation& p,
                                                 const std::vector<int>& assignment) {
  std::vector<Rational> values(assignment.begin(), assignment.end());
  std::vector<std::vector<int>> perms;
  for (const auto& b : p.blocks) {
    if (b.rows != b.cols) throw DomainError("non-square block '" + b.label + "'");
    std::vector<int> perm(b.rows, -1);
    for (int r = 0; r < b.rows; ++r) {
      for (int c = 0; c < b.cols; ++c) {
        const Rational v = b.at(r, c).evaluate(values);
        if (v == 0) continue;
        if (v != 1 || perm[r] != -1)
          throw DomainError("block '" + b.label + "' is not a permutation at this point");
        perm[r] = c;
      }
      if (perm[r] == -1)
        throw DomainError("block '" + b.label + "' is not a permutation at this point");
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::string solution_signature(const Presentation& p, const std::vector<int>& assignment) {
  std::string out;
  for (const auto& perm : block_permutations(p, assignment)) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(perm[i]);
    }
  }
  return out;
}

std::string commutative_presentation_text(const CommutativePresentation& c) {
  std::ostringstream out;
  out << "variables:";
  for (const auto& g : c.gens->all()) out << ' ' << g.name;
  out << "\nidempotent:";
  for (int v = 0; v < c.gens->size(); ++v)
    if (c.idempotent[v]) out << ' ' << c.gens->at(v).name;
  out << "\nrelations:\n";
  for (const auto& r : c.relations) out << r.text(*c.gens) << "\n";
  return out.str();
}

}  // namespace qsym
