#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsymkit/polynomial.hpp"

namespace qsym {

// Relations understood as "= 0", kept monic, sorted and deduplicated under
// the fixed degree-lexicographic orientation.
struct RelationSet {
  std::vector<NCPolynomial> relations;

  bool contains(const NCPolynomial& p) const;
};

RelationSet canonicalize_relations(std::vector<NCPolynomial> relations);

// A magic-unitary index grid. Entries are affine combinations of generators;
// for plain blocks each entry is a single generator.
struct MagicBlock {
  std::string label;
  int rows = 0;
  int cols = 0;
  std::vector<NCPolynomial> entries;  // row-major, rows*cols affine polynomials

  const NCPolynomial& at(int r, int c) const { return entries[r * cols + c]; }
};

struct Presentation {
  GeneratorSetPtr gens;
  RelationSet relations;
  std::vector<MagicBlock> blocks;
  std::string builder;       // provenance: builder name
  std::uint64_t input_hash = 0;  // provenance: hash of the builder input
};

// Checks structural invariants: block entries affine over the universe, and
// the projection, row-sum and column-sum relations of every block present
// (modulo canonicalization; identically-zero instances are vacuous).
void validate_presentation(const Presentation& p);

// Relations a block entry set must satisfy: projections, row/column sums,
// and explicit row/column orthogonality. Zero polynomials are dropped.
std::vector<NCPolynomial> magic_block_relations(const MagicBlock& block, GeneratorSetPtr gens);

// Canonical text form: provenance header, generator list, blocks, then one
// relation per line.
std::string presentation_text(const Presentation& p);

// Structural equality after renaming generators by position.
bool equal_up_to_renaming(const Presentation& a, const Presentation& b);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace qsym
