#include "qsymkit/models.hpp"

#include <algorithm>
#include <sstream>

#include "qsymkit/abelian.hpp"
#include "qsymkit/builders.hpp"
#include "qsymkit/errors.hpp"

namespace qsym {

const RMatrix& MatrixModel::matrix(int gen) const {
  auto it = assignment.find(gen);
  if (it == assignment.end()) throw DomainError("model misses generator " + std::to_string(gen));
  return it->second;
}

RMatrix evaluate(const NCPolynomial& poly, const MatrixModel& m) {
  RMatrix out(m.dim, m.dim);
  for (const auto& [w, c] : poly.terms()) {
    RMatrix prod = RMatrix::identity(m.dim);
    for (const Letter& l : w) {
      const RMatrix& g = m.matrix(l.gen);
      prod = prod * (l.star ? g.transpose() : g);
    }
    out = out + prod * c;
  }
  return out;
}

VerifyReport verify_model(const MatrixModel& m, const Presentation& p) {
  VerifyReport report;
  bool structural_ok = true;
  for (const auto& g : p.gens->all()) {
    auto it = m.assignment.find(g.id);
    if (it == m.assignment.end()) {
      report.structural_failures.push_back("missing matrix for " + g.name);
      structural_ok = false;
      continue;
    }
    if (it->second.rows() != m.dim || it->second.cols() != m.dim)
      throw DomainError("dimension mismatch for generator " + g.name);
    if (g.selfadjoint && !it->second.is_symmetric()) {
      report.structural_failures.push_back("selfadjoint generator " + g.name +
                                           " mapped to an asymmetric matrix");
      structural_ok = false;
    }
  }
  if (!structural_ok) {
    report.pass = false;
    return report;
  }
  report.pass = true;
  for (const auto& rel : p.relations.relations) {
    VerifyReport::Entry entry;
    entry.relation = rel.text();
    entry.residual = evaluate(rel, m);
    entry.zero = entry.residual.is_zero();
    report.pass = report.pass && entry.zero;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

MatrixModel scalar_model(const Presentation& p, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != p.gens->size())
    throw DomainError("assignment size mismatch");
  MatrixModel m;
  m.dim = 1;
  for (int id = 0; id < p.gens->size(); ++id)
    m.assignment.emplace(id, RMatrix::scalar(assignment[id]));
  return m;
}

MatrixModel permutation_model(const Presentation& p, const PermutationSolution& s) {
  std::vector<int> assignment(p.gens->size(), -1);
  const int n = static_cast<int>(s.perm.size());
  bool found_block = false;
  for (const auto& b : p.blocks) {
    if (b.rows != n || b.cols != n) continue;
    found_block = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& e = b.at(i, j);
        if (e.terms().size() == 1 && e.degree() == 1 && e.leading_coefficient() == 1)
          assignment[e.leading_word()[0].gen] = s.perm[i] == j ? 1 : 0;
      }
  }
  if (!found_block) throw DomainError("presentation has no block matching the permutation size");
  for (int id = 0; id < p.gens->size(); ++id)
    if (assignment[id] < 0)
      throw DomainError("generator " + p.gens->at(id).name + " not determined by the block");
  MatrixModel m = scalar_model(p, assignment);
  if (!verify_model(m, p).pass)
    throw DomainError("permutation does not solve the presentation");
  return m;
}

MatrixModel model_direct_sum(const MatrixModel& a, const MatrixModel& b) {
  MatrixModel out;
  out.dim = a.dim + b.dim;
  for (const auto& [id, ma] : a.assignment) out.assignment.emplace(id, direct_sum(ma, b.matrix(id)));
  if (a.assignment.size() != b.assignment.size()) throw DomainError("model generator sets differ");
  return out;
}

MatrixModel cantor_witness_model() {
  RMatrix a(2, 2), b(2, 2), zero(2, 2);
  a.at(0, 0) = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b.at(i, j) = Rational(1, 2);
  const RMatrix id2 = RMatrix::identity(2);

  MatrixModel m;
  m.dim = 4;
  m.assignment.emplace(0, direct_sum(id2, zero));  // p
  m.assignment.emplace(1, direct_sum(a, zero));    // q1
  m.assignment.emplace(2, direct_sum(zero, b));    // q2
  m.assignment.emplace(3, direct_sum(zero, a));    // q3
  m.assignment.emplace(4, direct_sum(b, zero));    // q4
  return m;
}

MatrixModel cantor_raw_model(const MatrixModel& reduced_model, int n) {
  const Presentation reduced = cantor_level_presentation(n, CantorForm::Reduced);
  const Presentation raw = cantor_level_presentation(n, CantorForm::Raw);
  MatrixModel out;
  out.dim = reduced_model.dim;
  int raw_id = 0;
  for (const auto& b : reduced.blocks)
    for (const auto& e : b.entries) out.assignment.emplace(raw_id++, evaluate(e, reduced_model));
  if (raw_id != raw.gens->size()) throw DomainError("raw generator count mismatch");
  return out;
}

namespace {

RMatrix rank_one_projection(long u, long v) {
  const Rational norm = Rational(u) * u + Rational(v) * v;
  RMatrix p(2, 2);
  p.at(0, 0) = Rational(u) * u / norm;
  p.at(0, 1) = p.at(1, 0) = Rational(u) * v / norm;
  p.at(1, 1) = Rational(v) * v / norm;
  return p;
}

bool commute(const RMatrix& a, const RMatrix& b) { return (a * b - b * a).is_zero(); }

std::optional<Witness> search_two_projection_blocks(const Presentation& p,
                                                    const ModelFamily& family) {
  const auto solutions = classical_solutions(p);
  const int g = p.gens->size();
  for (int a = 0; a < g; ++a)
    for (int b = a + 1; b < g; ++b)
      for (std::size_t i = 0; i < solutions.size(); ++i)
        for (std::size_t j = i + 1; j < solutions.size(); ++j)
          for (int replaced : {a, b}) {
            if (solutions[i][replaced] == solutions[j][replaced]) continue;
            for (const auto& [u, v] : family.projection_params) {
              MatrixModel m;
              m.dim = 2;
              for (int id = 0; id < g; ++id) {
                if (id == replaced) {
                  m.assignment.emplace(id, rank_one_projection(u, v));
                } else {
                  RMatrix d(2, 2);
                  d.at(0, 0) = solutions[i][id];
                  d.at(1, 1) = solutions[j][id];
                  m.assignment.emplace(id, d);
                }
              }
              if (!commute(m.matrix(a), m.matrix(b))) {
                if (verify_model(m, p).pass) return Witness{a, b, std::move(m)};
              }
            }
          }
  return std::nullopt;
}

std::optional<Witness> search_permutation_sums(const Presentation& p, const ModelFamily& family) {
  // Direct sums of scalar classical models are simultaneously diagonal, so
  // they can never witness noncommutativity; the search still verifies them.
  const auto solutions = classical_solutions(p);
  std::vector<MatrixModel> sums;
  for (const auto& s : solutions) sums.push_back(scalar_model(p, s));
  for (int round = 1; round < family.max_summands; ++round) {
    std::vector<MatrixModel> next;
    for (const auto& m : sums)
      for (const auto& s : solutions) next.push_back(model_direct_sum(m, scalar_model(p, s)));
    for (const auto& m : next)
      if (!verify_model(m, p).pass)
        throw DomainError("direct sum of classical models failed verification");
    sums = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> noncommutativity_witness(const Presentation& p, const ModelFamily& family) {
  switch (family.kind) {
    case ModelFamily::Kind::PermutationDiagonalSums:
      return search_permutation_sums(p, family);
    case ModelFamily::Kind::TwoProjectionBlocks:
      return search_two_projection_blocks(p, family);
  }
  throw DomainError("unknown model family");
}

std::string matrix_model_text(const MatrixModel& m, const Presentation& p) {
  std::ostringstream out;
  out << "dim " << m.dim << "\n";
  for (const auto& g : p.gens->all()) {
    out << g.name << " =";
    const RMatrix& mat = m.matrix(g.id);
    for (int i = 0; i < mat.rows(); ++i) {
      out << (i ? " /" : "");
      for (int j = 0; j < mat.cols(); ++j) out << ' ' << rational_text(mat.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qsym
