#pragma once

#include <map>

#include "qsymkit/presentation.hpp"
#include "qsymkit/spaces.hpp"

namespace qsym {

// Universal quantum permutation relations on n points: n^2 selfadjoint
// projections with row/column sums 1 and explicit row/column orthogonality.
Presentation magic_unitary_presentation(int n);

// Magic unitary plus the linear commutation relations
//   sum_i sqdist[i][l] q_{ki} = sum_i sqdist[k][i] q_{il}   (all k, l),
// generated from squared distances throughout.
Presentation metric_commutation_presentation(const FiniteMetricSpace& x);

// Graph variant: commutation is imposed against the adjacency indicator and
// the non-adjacency indicator separately, never against infinite distances.
Presentation graph_commutation_presentation(const FiniteGraph& g);

// Magic unitary plus the quadratic relations
//   sum_{i,j} sqdist[i][j] q_{ki} q_{lj} = sqdist[k][l]   (all k, l).
Presentation qiso_quadratic_presentation(const FiniteMetricSpace& x);

// Magic unitary on the vertices plus q_{ai} q_{bj} = 0 whenever exactly one
// of (a,b), (i,j) is an edge. Undirected loop-free graphs only.
Presentation edge_orthogonality_presentation(const FiniteGraph& g);

// One magic-unitary block per level 1..n, interleaving relations between
// consecutive levels (every child choice), and the cross-level orthogonality
// they imply, materialized so that bounded rewriting can reach the standard
// derivations.
Presentation tree_diagram_presentation(const TreeDiagram& t, int n);

enum class CantorForm { Raw, Reduced };

// Raw: the depth-n binary tree diagram presentation with multi-index labels.
// Reduced: the free-choice parametrization; one chosen subprojection per
// parent pair, complements as affine combinations, block entries laid out as
// in the 4x4 magic unitary.
Presentation cantor_level_presentation(int n, CantorForm form);

// Generators p and p_{m_1...m_k} (k <= depth, m_i in 1..4) with the
// subordination tower p_{M,1}, p_{M,2} <= p_M and p_{M,3}, p_{M,4} <= p_M^perp.
Presentation cantor_limit_presentation(int depth);

// Morphism data between consecutive presentations: each source generator is
// sent to an affine combination of target generators (coefficient-one sums
// plus a rational constant).
struct ConnectingMap {
  std::map<int, NCPolynomial> images;  // source generator id -> polynomial over target
};

NCPolynomial substitute(const NCPolynomial& p, const std::map<int, NCPolynomial>& images,
                        GeneratorSetPtr target);

// Colimit of generators and relations. Each source generator is replaced by
// its image; relations of every level are imported and canonicalized. A map
// whose images violate a source relation (substitution does not reduce to
// zero in the next level at degree 4) is rejected with the offending
// relation named.
Presentation inductive_limit_assemble(const std::vector<Presentation>& levels,
                                      const std::vector<ConnectingMap>& maps);

// Name-matching inclusion between presentations.
ConnectingMap identity_connecting_map(const Presentation& source, const Presentation& target);

// Maps between consecutive raw Cantor towers: lower-level generators map to
// their namesakes, top-level generators to the child sums
// a_{I,J} -> a_{I1,J1} + a_{I2,J1}.
std::vector<ConnectingMap> cantor_connecting_maps(const std::vector<Presentation>& towers);

}  // namespace qsym
