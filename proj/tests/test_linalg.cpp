#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexr/linalg.hpp"
#include "alexr/rng.hpp"

using namespace alexr;

namespace {

LaurentPoly random_poly(Rng& rng, int nv, int max_terms = 3) {
    LaurentPoly p(nv);
    int terms = rng.range(0, max_terms);
    for (int i = 0; i < terms; ++i) {
        ExpVec e = exp_zero(nv);
        for (int v = 0; v < nv; ++v) e[static_cast<size_t>(v)] = rng.range(-1, 1);
        p.add_term(e, rng.range(-2, 2));
    }
    return p;
}

PolyMatrix random_matrix(Rng& rng, int n, int nv) {
    PolyMatrix m = PolyMatrix::zero(n, n, nv);
    for (auto& e : m.entries) e = random_poly(rng, nv);
    return m;
}

// Independent oracle: cofactor expansion along the first row.
LaurentPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows == 0) return LaurentPoly::constant(m.nvars, 1);
    if (m.rows == 1) return m.at(0, 0);
    LaurentPoly acc(m.nvars);
    for (int c = 0; c < m.cols; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix sub = PolyMatrix::zero(m.rows - 1, m.cols - 1, m.nvars);
        for (int r = 1; r < m.rows; ++r) {
            int cc = 0;
            for (int k = 0; k < m.cols; ++k) {
                if (k == c) continue;
                sub.at(r - 1, cc++) = m.at(r, k);
            }
        }
        LaurentPoly term = m.at(0, c) * det_cofactor(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("determinant examples") {
    int nv = 1;
    LaurentPoly t = LaurentPoly::variable(nv, 0), o = LaurentPoly::constant(nv, 1);
    LaurentPoly trefoil = o - t + t * t;

    PolyMatrix m = PolyMatrix::zero(2, 2, nv);
    m.at(0, 0) = trefoil;
    m.at(0, 1) = -trefoil;
    m.at(1, 0) = o;
    CHECK(det_fraction_free(m) == trefoil);
    CHECK(det_cofactor(m) == trefoil);

    PolyMatrix id3 = PolyMatrix::zero(3, 3, nv);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = o;
    CHECK(det_fraction_free(id3) == o);

    PolyMatrix rep = PolyMatrix::zero(3, 3, nv);
    for (int c = 0; c < 3; ++c) {
        rep.at(0, c) = t + o;
        rep.at(2, c) = t + o;  // repeated row
        rep.at(1, c) = LaurentPoly::monomial(nv, {c - 1});
    }
    CHECK(det_fraction_free(rep).is_zero());

    CHECK_THROWS_AS(det_fraction_free(PolyMatrix::zero(2, 3, nv)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor oracle up to 4x4") {
    Rng rng(21);
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < 40; ++i) {
            PolyMatrix m = random_matrix(rng, n, 2);
            CHECK(det_fraction_free(m) == det_cofactor(m));
        }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        int n = rng.range(1, 3);
        PolyMatrix a = random_matrix(rng, n, 1), b = random_matrix(rng, n, 1);
        PolyMatrix ab = PolyMatrix::zero(n, n, 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int k = 0; k < n; ++k) ab.at(r, c) += a.at(r, k) * b.at(k, c);
        CHECK(det_fraction_free(ab) == det_fraction_free(a) * det_fraction_free(b));
    }
}

TEST_CASE("field determinant clears denominators") {
    int nv = 1;
    LaurentPoly t = LaurentPoly::variable(nv, 0), o = LaurentPoly::constant(nv, 1);
    FieldMatrix m = FieldMatrix::zero(2, 2, nv);
    m.at(0, 0) = RatFunc(o, t - o);
    m.at(0, 1) = RatFunc::one(nv);
    m.at(1, 0) = RatFunc::one(nv);
    m.at(1, 1) = RatFunc(t, t - o);
    // det = t/(t-1)^2 - 1
    RatFunc expect = RatFunc(t, (t - o) * (t - o)) - RatFunc::one(nv);
    CHECK(det(m) == expect);
}

TEST_CASE("rank and kernel examples") {
    int nv = 1;
    LaurentPoly t = LaurentPoly::variable(nv, 0), o = LaurentPoly::constant(nv, 1);
    {
        FieldMatrix m = FieldMatrix::zero(1, 2, nv);
        m.at(0, 0) = RatFunc::from_poly(t - o);
        m.at(0, 1) = RatFunc::from_poly(o - t);
        RankKernel rk = rank_kernel(m);
        CHECK(rk.rank == 1);
        REQUIRE(rk.kernel.size() == 1);
        CHECK(rk.kernel[0][0] == RatFunc::one(nv));
        CHECK(rk.kernel[0][1] == RatFunc::one(nv));
    }
    {
        RankKernel rk = rank_kernel(FieldMatrix::zero(2, 3, nv));
        CHECK(rk.rank == 0);
        CHECK(rk.kernel.size() == 3);
    }
    {
        FieldMatrix m = FieldMatrix::zero(2, 2, nv);
        m.at(0, 0) = RatFunc::one(nv);
        m.at(1, 1) = RatFunc::from_poly(t);
        RankKernel rk = rank_kernel(m);
        CHECK(rk.rank == 2);
        CHECK(rk.kernel.empty());
    }
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        int rows = rng.range(1, 4), cols = rng.range(1, 4);
        FieldMatrix m = FieldMatrix::zero(rows, cols, 1);
        for (auto& e : m.entries) e = RatFunc::from_poly(random_poly(rng, 1));
        RankKernel rk = rank_kernel(m);
        CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == cols);
        for (const auto& v : rk.kernel) {
            auto img = m.apply(v);
            for (const auto& e : img) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("integer rank") {
    CHECK(int_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(int_rank({{2, 4}, {1, 2}}) == 1);
    CHECK(int_rank({{0, 0}}) == 0);
    CHECK(int_rank({}) == 0);
}
