#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsymkit/classical.hpp"
#include "qsymkit/matrix.hpp"
#include "qsymkit/presentation.hpp"

namespace qsym {

// Exact finite-dimensional representation data: one matrix per generator.
struct MatrixModel {
  int dim = 0;
  std::map<int, RMatrix> assignment;

  const RMatrix& matrix(int gen) const;
};

struct VerifyReport {
  struct Entry {
    std::string relation;
    bool zero = false;
    RMatrix residual;
  };
  bool pass = false;
  std::vector<Entry> entries;
  std::vector<std::string> structural_failures;  // missing/asymmetric/mis-sized matrices
};

// Evaluates every relation of p in the model; passes iff all residuals are
// zero and selfadjoint generators map to symmetric matrices.
VerifyReport verify_model(const MatrixModel& m, const Presentation& p);

RMatrix evaluate(const NCPolynomial& poly, const MatrixModel& m);

// Dimension-one model from a {0,1} assignment.
MatrixModel scalar_model(const Presentation& p, const std::vector<int>& assignment);

// Dimension-one model of a classical permutation solution: each plain block
// entry q_{ij} becomes the scalar [sigma(i) = j]. Requires a single
// generator-entry block covering all generators; throws when s fails a
// relation.
MatrixModel permutation_model(const Presentation& p, const PermutationSolution& s);

MatrixModel model_direct_sum(const MatrixModel& a, const MatrixModel& b);

// The canonical exact noncommutativity witness for the level-2 Cantor
// presentation (reduced form): a 2+2 block model built from the projection
// pair A = [[1,0],[0,0]], B = [[1/2,1/2],[1/2,1/2]].
MatrixModel cantor_witness_model();

// Transports a model of the reduced level-n Cantor presentation to the raw
// one by evaluating the reduced block entries.
MatrixModel cantor_raw_model(const MatrixModel& reduced_model, int n);

struct ModelFamily {
  enum class Kind { PermutationDiagonalSums, TwoProjectionBlocks };
  Kind kind = Kind::TwoProjectionBlocks;
  // Direction vectors (u, v) for the replaced rank-one projection.
  std::vector<std::pair<long, long>> projection_params = {{1, 1}};
  int max_summands = 2;  // for permutation-diagonal sums
};

struct Witness {
  int gen_a = 0;
  int gen_b = 0;
  MatrixModel model;
};

// Searches the family for a passing model with a non-commuting generator
// pair. Deterministic: generator pairs by index, then family members by
// (dimension, parameter order). Absence of a witness is a valid outcome.
std::optional<Witness> noncommutativity_witness(const Presentation& p, const ModelFamily& family);

std::string matrix_model_text(const MatrixModel& m, const Presentation& p);

}  // namespace qsym
