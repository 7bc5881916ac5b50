// Torsion of finite based chain complexes over the fraction field: the
// alternating product of change-of-basis determinants
//
//   tau(C; c, h) = prod_i [(b_i h_i) b_{i-1} / c_i]^{(-1)^{i+1}},
//
// torsion as a multilinear function in a single homology degree, and the
// multiplicativity check for short exact sequences of based complexes.
//
// Boundary bases b_i are chosen greedily as pivot columns of the boundary
// maps and lifted through those pivots; the result is independent of these
// choices, which the tests exercise by permuting the pivot order.

#pragma once

#include "alexr/linalg.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace alexr {

// Finite chain complex C_m -> ... -> C_0 with the standard coordinate bases.
// boundaries[i] is the matrix of d_{i+1} : C_{i+1} -> C_i, so a complex of
// length m stores m matrices; dims has m+1 entries.
struct BasedChainComplex {
    int nvars = 0;
    std::vector<int> dims;
    std::vector<FieldMatrix> boundaries;

    int length() const { return static_cast<int>(boundaries.size()); }
    const FieldMatrix& boundary(int i) const;  // d_i, 1 <= i <= length
    // Throws unless shapes are consistent and d_i d_{i+1} = 0 exactly.
    void validate() const;
};

// Per degree i, cycle vectors representing a basis of H_i(C).  Degrees with
// no homology hold empty lists.
struct HomologyBasis {
    std::vector<std::vector<std::vector<RatFunc>>> vectors;  // [degree][basis index][coord]
};

std::vector<int> homology_dims(const BasedChainComplex& c);

// True if every vector in h is a cycle and the classes form a basis of H.
bool valid_homology_basis(const BasedChainComplex& c, const HomologyBasis& h);

// tau(C; c, h).  Throws on invalid input; never returns zero.
RatFunc torsion(const BasedChainComplex& c, const HomologyBasis& h);

// Same, with an explicit column-preference permutation per boundary map used
// when picking pivot columns; exposes the choice the definition is
// independent of.
RatFunc torsion_pivots(const BasedChainComplex& c, const HomologyBasis& h,
                       const std::vector<std::vector<int>>& column_order);

// The unique alternating multilinear map ell with ell(v_1 ^ ... ^ v_beta)
// equal to tau (k odd) or tau^{-1} (k even) on bases of H_k; bases h_i are
// supplied for every i != k.  The returned function takes beta cycle vectors.
std::function<RatFunc(const std::vector<std::vector<RatFunc>>&)> torsion_function(
    const BasedChainComplex& c, int k, const HomologyBasis& partial_h);

// Short exact sequence 0 -> C' -> C -> C'' -> 0 of based complexes with
// degreewise inclusion/projection matrices.
struct ChainMapPair {
    std::vector<FieldMatrix> inclusion;   // C'_i -> C_i, one per degree 0..m
    std::vector<FieldMatrix> projection;  // C_i -> C''_i
};

// Returns tau(C)/(tau(C') tau(C'') tau(H)) where H is the induced long exact
// homology sequence based by (h', h, h''); by multiplicativity this ratio is
// +-1.  Throws if the sequence is not exact or the bases are incompatible.
RatFunc ses_multiplicativity_check(const BasedChainComplex& cprime, const BasedChainComplex& c,
                                   const BasedChainComplex& csecond, const ChainMapPair& maps,
                                   const HomologyBasis& hprime, const HomologyBasis& h,
                                   const HomologyBasis& hsecond);

}  // namespace alexr
