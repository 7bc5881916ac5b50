// Small corpus of standard inputs used by the verification suites and the
// acceptance checks: knot group presentations with meridians (and parallels
// where known), and the solid-torus exteriors realizing closed manifolds.

#pragma once

#include "alexr/functor.hpp"

namespace alexr {
namespace corpus {

// <x1 | >, meridian x1.
KnotInput unknot();

// <x1, x2 | x1 x2 x1 x2^-1 x1^-1 x2^-1>, meridian x1; parallel is the
// genuine null-homologous longitude (x1 x2)^3 x1^-6.
KnotInput trefoil();

// Wirtinger presentation of the figure-eight knot from the closure of the
// braid (s1 s2^-1)^2, one redundant relator dropped.
KnotInput figure_eight();

// Torus-knot presentation of the (2,5) knot from the braid s1^5.
KnotInput cinquefoil();

// Exterior of S^1 x pt inside S^1 x S^2: one generator, no relators,
// parallel = core.  closed_torsion gives the torsion of S^1 x S^2.
KnotInput s1_x_s2();

// Exterior of S^1 x pt x pt inside the 3-torus, a rank-2 representation on
// two variables; closed_torsion gives the torsion of T^3.
KnotInput three_torus();

// The twisted cell chain complex of S^1 x S^2 from the product CW structure
// (one cell per dimension), the independent oracle for its torsion.
struct CwOracle {
    std::vector<int> dims;
    std::vector<FieldMatrix> boundaries;
};
CwOracle s1_x_s2_cw_complex();

// Knot exterior of the trefoil as a spine-presented morphism 1 -> 0.
PresentedCobordism trefoil_presented();

// Solid-torus exterior of the S^1 x S^2 core as a presented morphism 1 -> 0
// with the core as bottom beta.
PresentedCobordism s1_x_s2_presented();

}  // namespace corpus
}  // namespace alexr
