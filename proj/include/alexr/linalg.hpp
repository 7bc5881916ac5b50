// Exact dense linear algebra over LaurentPoly and RatFunc: fraction-free
// determinants, rank and kernels over the fraction field, integer matrix
// rank.  Matrices in this domain stay small (a few dozen rows at most), so
// everything is dense and deterministic: pivots are chosen as the first row
// with a nonzero entry, scanning columns left to right.

#pragma once

#include "alexr/laurent.hpp"

#include <vector>

namespace alexr {

struct PolyMatrix {
    int rows = 0, cols = 0, nvars = 0;
    std::vector<LaurentPoly> entries;  // row-major, rows*cols

    static PolyMatrix zero(int rows, int cols, int nvars);
    LaurentPoly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const LaurentPoly& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

struct FieldMatrix {
    int rows = 0, cols = 0, nvars = 0;
    std::vector<RatFunc> entries;

    static FieldMatrix zero(int rows, int cols, int nvars);
    static FieldMatrix identity(int n, int nvars);
    RatFunc& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const RatFunc& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    FieldMatrix transpose() const;
    std::vector<RatFunc> col(int c) const;
    std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;  // matrix * vector

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
};

FieldMatrix scalar_mul(const RatFunc& c, const FieldMatrix& m);
FieldMatrix involute(const FieldMatrix& m);
FieldMatrix submatrix(const FieldMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols);

// Exact determinant by Bareiss elimination.  Rows are first shifted by
// monomials so that all exponents are nonnegative; the tracked shift is
// divided back out at the end.  Rejects non-square input.
LaurentPoly det_fraction_free(const PolyMatrix& m);

// Determinant over the fraction field: each row is cleared of denominators
// into a PolyMatrix, the product of the clearing factors is divided back.
RatFunc det(const FieldMatrix& m);

struct RankKernel {
    int rank = 0;
    std::vector<std::vector<RatFunc>> kernel;  // exact basis of the null space
    std::vector<int> pivot_cols;               // in elimination order
};

// Rank and kernel over the fraction field; rank + kernel.size() == cols and
// m * v = 0 exactly for every kernel vector v.
RankKernel rank_kernel(const FieldMatrix& m);

// Rank over the integers (equivalently over the rationals).
int int_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace alexr
