#include "alexr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace alexr {

PolyMatrix PolyMatrix::zero(int rows, int cols, int nvars) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.nvars = nvars;
    m.entries.assign(static_cast<size_t>(rows) * cols, LaurentPoly::zero(nvars));
    return m;
}

FieldMatrix FieldMatrix::zero(int rows, int cols, int nvars) {
    FieldMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.nvars = nvars;
    m.entries.assign(static_cast<size_t>(rows) * cols, RatFunc::zero(nvars));
    return m;
}

FieldMatrix FieldMatrix::identity(int n, int nvars) {
    FieldMatrix m = zero(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(nvars);
    return m;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix m = zero(cols, rows, nvars);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(c, r) = at(r, c);
    return m;
}

std::vector<RatFunc> FieldMatrix::col(int c) const {
    std::vector<RatFunc> v;
    v.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<RatFunc> FieldMatrix::apply(const std::vector<RatFunc>& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("FieldMatrix::apply: size mismatch");
    std::vector<RatFunc> out(static_cast<size_t>(rows), RatFunc::zero(nvars));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!at(r, c).is_zero() && !v[static_cast<size_t>(c)].is_zero())
                out[static_cast<size_t>(r)] += at(r, c) * v[static_cast<size_t>(c)];
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("FieldMatrix*: shape mismatch");
    check_same_vars(a.nvars, b.nvars, "FieldMatrix*");
    FieldMatrix m = FieldMatrix::zero(a.rows, b.cols, a.nvars);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < b.cols; ++c)
                if (!b.at(k, c).is_zero()) m.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return m;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("FieldMatrix+: shape mismatch");
    FieldMatrix m = FieldMatrix::zero(a.rows, a.cols, a.nvars);
    for (size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = a.entries[i] + b.entries[i];
    return m;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i] == b.entries[i])) return false;
    return true;
}

FieldMatrix scalar_mul(const RatFunc& c, const FieldMatrix& m) {
    FieldMatrix r = m;
    for (auto& e : r.entries) e = c * e;
    return r;
}

FieldMatrix involute(const FieldMatrix& m) {
    FieldMatrix r = m;
    for (auto& e : r.entries) e = involute(e);
    return r;
}

FieldMatrix submatrix(const FieldMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    FieldMatrix r = FieldMatrix::zero(static_cast<int>(rows.size()),
                                      static_cast<int>(cols.size()), m.nvars);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    return r;
}

namespace {

// Smallest per-variable exponent over a row; used to shift rows into the
// ordinary polynomial ring before Bareiss elimination.
ExpVec row_min_exponents(const PolyMatrix& m, int r) {
    ExpVec mins = exp_zero(m.nvars);
    bool first = true;
    for (int c = 0; c < m.cols; ++c) {
        for (const auto& [e, coef] : m.at(r, c).terms()) {
            if (first) {
                mins = e;
                first = false;
            } else {
                for (size_t i = 0; i < mins.size(); ++i)
                    mins[i] = std::min(mins[i], e[static_cast<size_t>(i)]);
            }
        }
    }
    return mins;
}

}  // namespace

LaurentPoly det_fraction_free(const PolyMatrix& input) {
    if (input.rows != input.cols) throw std::invalid_argument("det_fraction_free: non-square matrix");
    const int n = input.rows;
    const int nv = input.nvars;
    if (n == 0) return LaurentPoly::constant(nv, 1);

    PolyMatrix m = input;
    ExpVec total_shift = exp_zero(nv);
    for (int r = 0; r < n; ++r) {
        ExpVec mins = row_min_exponents(m, r);
        total_shift = exp_add(total_shift, mins);
        LaurentPoly mono = LaurentPoly::monomial(nv, exp_neg(mins), 1);
        for (int c = 0; c < n; ++c) m.at(r, c) = mono * m.at(r, c);
    }

    int sign = 1;
    LaurentPoly prev_pivot = LaurentPoly::constant(nv, 1);
    for (int k = 0; k < n - 1; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r)
            if (!m.at(r, k).is_zero()) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) return LaurentPoly::zero(nv);
        if (pivot_row != k) {
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot_row, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                LaurentPoly num = m.at(k, k) * m.at(r, c) - m.at(r, k) * m.at(k, c);
                auto q = divide_exact(num, prev_pivot);
                if (!q) throw std::logic_error("det_fraction_free: inexact Bareiss division");
                m.at(r, c) = *q;
            }
            m.at(r, k) = LaurentPoly::zero(nv);
        }
        prev_pivot = m.at(k, k);
    }

    LaurentPoly d = m.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return LaurentPoly::monomial(nv, total_shift, 1) * d;
}

RatFunc det(const FieldMatrix& input) {
    if (input.rows != input.cols) throw std::invalid_argument("det: non-square matrix");
    const int n = input.rows;
    const int nv = input.nvars;
    PolyMatrix m = PolyMatrix::zero(n, n, nv);
    LaurentPoly divisor = LaurentPoly::constant(nv, 1);
    for (int r = 0; r < n; ++r) {
        LaurentPoly d = LaurentPoly::constant(nv, 1);
        for (int c = 0; c < n; ++c) d = d * input.at(r, c).den();
        divisor = divisor * d;
        for (int c = 0; c < n; ++c) {
            auto q = divide_exact(d, input.at(r, c).den());
            m.at(r, c) = input.at(r, c).num() * *q;
        }
    }
    return RatFunc(det_fraction_free(m), divisor);
}

RankKernel rank_kernel(const FieldMatrix& input) {
    const int nv = input.nvars;
    // Row-reduce a working copy over the field; denominators stay tame at the
    // scale of this project and pivoting is deterministic.
    FieldMatrix m = input;
    std::vector<int> pivot_col_of_row;
    int lead_row = 0;
    for (int c = 0; c < m.cols && lead_row < m.rows; ++c) {
        int pr = -1;
        for (int r = lead_row; r < m.rows; ++r)
            if (!m.at(r, c).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != lead_row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(lead_row, j), m.at(pr, j));
        RatFunc inv_pivot = RatFunc::one(nv) / m.at(lead_row, c);
        for (int j = c; j < m.cols; ++j) m.at(lead_row, j) = inv_pivot * m.at(lead_row, j);
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead_row || m.at(r, c).is_zero()) continue;
            RatFunc f = m.at(r, c);
            for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) - f * m.at(lead_row, j);
        }
        pivot_col_of_row.push_back(c);
        ++lead_row;
    }

    RankKernel out;
    out.rank = static_cast<int>(pivot_col_of_row.size());
    out.pivot_cols = pivot_col_of_row;

    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<RatFunc> v(static_cast<size_t>(m.cols), RatFunc::zero(nv));
        v[static_cast<size_t>(c)] = RatFunc::one(nv);
        for (int r = 0; r < out.rank; ++r)
            v[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] = -m.at(r, c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int int_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    const int nc = static_cast<int>(rows.front().size());
    FieldMatrix m = FieldMatrix::zero(static_cast<int>(rows.size()), nc, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != nc)
            throw std::invalid_argument("int_rank: ragged rows");
        for (int c = 0; c < nc; ++c)
            m.at(static_cast<int>(r), c) = RatFunc::constant(0, rows[r][static_cast<size_t>(c)]);
    }
    return rank_kernel(m).rank;
}

}  // namespace alexr
