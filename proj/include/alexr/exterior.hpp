// Exterior algebra over based vector spaces: multivectors indexed by strictly
// increasing subsets, wedge products, the volume-form pairing, graded linear
// maps of fixed degree between exterior algebras, the Koszul-signed tensor
// product, and equality up to a global +-t^k unit.
//
// Basis convention for an object of genus g: indices 1..g are a_1..a_g and
// indices g+1..2g are b_1..b_g (0-based bits 0..g-1 and g..2g-1 in masks).
// Tensoring objects of genus g and h concatenates a-blocks then b-blocks:
// the first factor's a_i stays a_i, the second factor's a_i becomes a_{g+i},
// and likewise for the b's.

#pragma once

#include "alexr/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace alexr {

// Basis subsets of a dimension-d space, as bitmasks, listed in lexicographic
// order of the increasing index tuple; cached per (d, j).
const std::vector<uint32_t>& basis_masks(int dim, int j);
int basis_index(int dim, int j, uint32_t mask);
int popcount(uint32_t mask);

// Sign of merging two disjoint increasing index sets S then T; 0 if they
// overlap.
int merge_sign(uint32_t s, uint32_t t);

// Signature of the permutation that lists the members of `mask` (inside
// {0..dim-1}) first, followed by the complement, both in increasing order.
int shuffle_sign(uint32_t mask, int dim);

class Multivector {
public:
    Multivector() = default;
    Multivector(int dim, int nvars) : dim_(dim), nvars_(nvars) {}

    static Multivector basis_element(int dim, int nvars, uint32_t mask);
    static Multivector scalar(int dim, int nvars, const RatFunc& c);

    int dim() const { return dim_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<uint32_t, RatFunc>& terms() const { return terms_; }

    void add_term(uint32_t mask, const RatFunc& c);
    // Zero unless every term has degree j.
    bool homogeneous_of_degree(int j) const;

    friend Multivector operator+(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const RatFunc& c, const Multivector& m);
    friend bool operator==(const Multivector& a, const Multivector& b);

private:
    int dim_ = 0, nvars_ = 0;
    std::map<uint32_t, RatFunc> terms_;  // mask -> coefficient, no zeros
};

Multivector wedge(const Multivector& x, const Multivector& y);

// omega(x ^ y) for the canonical integral volume form sending the full
// ordered basis wedge to 1; degrees must sum to the ambient dimension
// (mismatches contribute nothing and yield 0).
RatFunc volume_pair(const Multivector& x, const Multivector& y);

// Degree-homogeneous linear map between exterior algebras of based spaces of
// dimensions src_dim and dst_dim.  Block j maps the Lambda^j basis to the
// Lambda^{j+degree} basis; absent blocks are zero (degree-violating blocks
// are always absent).
struct GradedMap {
    int src_dim = 0, dst_dim = 0, degree = 0, nvars = 0;
    std::map<int, FieldMatrix> blocks;

    static GradedMap zero(int src_dim, int dst_dim, int degree, int nvars);
    static GradedMap identity(int dim, int nvars);

    // Lowest/highest source degree that could carry a nonzero block.
    int j_min() const;
    int j_max() const;

    const FieldMatrix* block(int j) const;
    FieldMatrix block_or_zero(int j) const;
    void set_block(int j, FieldMatrix m);
    void prune();  // drop all-zero blocks
    bool is_zero() const;

    Multivector apply(const Multivector& x) const;

    friend bool operator==(const GradedMap& a, const GradedMap& b);  // exact equality
};

GradedMap compose(const GradedMap& after, const GradedMap& first);
GradedMap scalar_mul(const RatFunc& c, const GradedMap& m);

// Lambda of a square matrix: blocks are the minor matrices in every exterior
// power. On Lambda^top this acts by det(m).
GradedMap lambda_extend(const FieldMatrix& m);

// Koszul-rule tensor product (a tensor b)(u tensor v) =
// (-1)^{deg(b)|u|} a(u) tensor b(v), expressed in the concatenated basis.
GradedMap tensor_koszul(const GradedMap& a, const GradedMap& b);

// Graded map defined up to one global MonomialUnit across all blocks.
struct ProjectiveGradedMap {
    GradedMap rep;
};

// True iff a single unit u exists with p = u*q across all blocks.
bool proj_eq(const GradedMap& p, const GradedMap& q);
inline bool proj_eq(const ProjectiveGradedMap& p, const ProjectiveGradedMap& q) {
    return proj_eq(p.rep, q.rep);
}

// Label like "a1^b2" for a basis mask of an object of genus g (dim = 2g);
// "1" for the empty mask.
std::string mask_label(uint32_t mask, int genus);

}  // namespace alexr
