#pragma once

#include "qsymkit/presentation.hpp"

namespace qsym {

// C*-positivity simplification: a relation whose terms are all positive
// multiples of words of shape w w* forces every such w to vanish (this
// covers "x selfadjoint and x^2 = 0 implies x = 0"). Iterates to a fixpoint;
// the result is canonicalized. Sound for exact matrix models: each w w*
// evaluates to M M^T, which is positive semidefinite.
RelationSet positivity_simplify(const RelationSet& relations);

}  // namespace qsym
