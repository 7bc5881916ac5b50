// Twisted intersection forms of surfaces in their explicit lower-triangular
// matrix form, the induced sesquilinear pairings on exterior powers, and the
// executable duality checks: the defining matrix identity, the adjunction of
// a cobordism against its time-reversal under the twisted pairing, and the
// volume-form adjunction with its sign.

#pragma once

#include "alexr/functor.hpp"

namespace alexr {

struct IntersectionForm {
    int k = 0;  // genus
    CobObject psi;
    FieldMatrix j;  // 2k x 2k matrix of the pairing in the (a, b) basis
};

// Builds J blockwise with P(x, y) = (1 - psi(x)) * involute(1 - psi(y)) below
// the diagonals and the four displayed diagonals; trivial psi yields the
// standard symplectic matrix [[0, I], [-I, 0]].
IntersectionForm intersection_matrix(const CobObject& psi);

// Gram-determinant pairing of two multivectors of equal degree, sesquilinear
// in the second slot; degree 0 pairs as x * involute(y).
RatFunc pair_wedge(const Multivector& x, const Multivector& y, const IntersectionForm& form);

// The defining identity J = -involute(J^T) + d * involute(d)^T where d holds
// the boundary values psi(loop) - 1.
bool check_92(const IntersectionForm& form);

// Pull-back of the target pairing through a homology action f equals the
// source pairing exactly: f^T * J_target * involute(f) == J_source.
bool pairing_preserved(const FieldMatrix& f, const IntersectionForm& source,
                       const IntersectionForm& target);

// <R(M)(x), y> == u * <x, R(dual M)(y)> for one global unit u over all basis
// pairs and degrees.
bool verify_duality(const HeegaardWord& w);

// omega(R(M)(x) ^ y) == u * (-1)^{jg} omega(x ^ R(dual M)(y)) for one global
// unit u.
bool verify_95(const HeegaardWord& w);

}  // namespace alexr
