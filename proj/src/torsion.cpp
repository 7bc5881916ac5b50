#include "alexr/torsion.hpp"

#include <stdexcept>

namespace alexr {

const FieldMatrix& BasedChainComplex::boundary(int i) const {
    if (i < 1 || i > length()) throw std::invalid_argument("boundary: index out of range");
    return boundaries[static_cast<size_t>(i) - 1];
}

void BasedChainComplex::validate() const {
    if (dims.size() != boundaries.size() + 1)
        throw std::invalid_argument("BasedChainComplex: dims/boundaries size mismatch");
    for (int i = 1; i <= length(); ++i) {
        const FieldMatrix& b = boundary(i);
        if (b.rows != dims[static_cast<size_t>(i) - 1] || b.cols != dims[static_cast<size_t>(i)])
            throw std::invalid_argument("BasedChainComplex: boundary shape mismatch");
    }
    for (int i = 1; i + 1 <= length(); ++i) {
        FieldMatrix prod = boundary(i) * boundary(i + 1);
        for (const auto& e : prod.entries)
            if (!e.is_zero()) throw std::invalid_argument("BasedChainComplex: dd != 0");
    }
}

namespace {

std::vector<RatFunc> unit_vector(int n, int at, int nvars) {
    std::vector<RatFunc> v(static_cast<size_t>(n), RatFunc::zero(nvars));
    v[static_cast<size_t>(at)] = RatFunc::one(nvars);
    return v;
}

// Greedy independent columns of m, scanning in the given column order.
std::vector<int> pivot_columns(const FieldMatrix& m, const std::vector<int>& order) {
    FieldMatrix work = m;
    std::vector<bool> row_used(static_cast<size_t>(m.rows), false);
    std::vector<int> pivots;
    for (int c : order) {
        int pr = -1;
        for (int r = 0; r < work.rows; ++r)
            if (!row_used[static_cast<size_t>(r)] && !work.at(r, c).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        row_used[static_cast<size_t>(pr)] = true;
        pivots.push_back(c);
        RatFunc inv = RatFunc::one(m.nvars) / work.at(pr, c);
        for (int r = 0; r < work.rows; ++r) {
            if (r == pr || work.at(r, c).is_zero()) continue;
            RatFunc f = work.at(r, c) * inv;
            for (int j = 0; j < work.cols; ++j) work.at(r, j) = work.at(r, j) - f * work.at(pr, j);
        }
    }
    return pivots;
}

std::vector<int> natural_order(int n) {
    std::vector<int> o(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) o[static_cast<size_t>(i)] = i;
    return o;
}

// Solve A x = z over the field; nullopt if z is outside the column span.
std::optional<std::vector<RatFunc>> solve(const FieldMatrix& a, const std::vector<RatFunc>& z) {
    FieldMatrix aug = FieldMatrix::zero(a.rows, a.cols + 1, a.nvars);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = z[static_cast<size_t>(r)];
    }
    RankKernel rk = rank_kernel(aug);
    for (const auto& v : rk.kernel) {
        const RatFunc& last = v[static_cast<size_t>(a.cols)];
        if (last.is_zero()) continue;
        std::vector<RatFunc> x(static_cast<size_t>(a.cols), RatFunc::zero(a.nvars));
        for (int c = 0; c < a.cols; ++c) x[static_cast<size_t>(c)] = -(v[static_cast<size_t>(c)] / last);
        return x;
    }
    return std::nullopt;
}

struct TorsionSetup {
    std::vector<std::vector<int>> pivots;  // pivots[i] for boundary d_i, i = 1..m (index i-1)
    std::vector<int> rank;                 // rank[i] for d_i, entries 0..m+1 (0 at both ends)
    std::vector<int> beta;                 // homology dimensions per degree
};

TorsionSetup make_setup(const BasedChainComplex& c, const std::vector<std::vector<int>>* orders) {
    TorsionSetup s;
    const int m = c.length();
    s.rank.assign(static_cast<size_t>(m) + 2, 0);
    for (int i = 1; i <= m; ++i) {
        std::vector<int> order = orders ? (*orders)[static_cast<size_t>(i) - 1]
                                        : natural_order(c.boundary(i).cols);
        s.pivots.push_back(pivot_columns(c.boundary(i), order));
        s.rank[static_cast<size_t>(i)] = static_cast<int>(s.pivots.back().size());
    }
    for (int i = 0; i <= m; ++i)
        s.beta.push_back(c.dims[static_cast<size_t>(i)] - s.rank[static_cast<size_t>(i)] -
                         s.rank[static_cast<size_t>(i) + 1]);
    return s;
}

bool check_homology_basis(const BasedChainComplex& c, const TorsionSetup& s,
                          const HomologyBasis& h, std::string* why) {
    const int m = c.length();
    if (static_cast<int>(h.vectors.size()) != m + 1) {
        if (why) *why = "homology basis must cover every degree";
        return false;
    }
    for (int i = 0; i <= m; ++i) {
        const auto& hi = h.vectors[static_cast<size_t>(i)];
        if (static_cast<int>(hi.size()) != s.beta[static_cast<size_t>(i)]) {
            if (why) *why = "homology basis size mismatch in degree " + std::to_string(i);
            return false;
        }
        const int n = c.dims[static_cast<size_t>(i)];
        for (const auto& v : hi) {
            if (static_cast<int>(v.size()) != n) {
                if (why) *why = "homology vector length mismatch in degree " + std::to_string(i);
                return false;
            }
            if (i >= 1) {
                auto img = c.boundary(i).apply(v);
                for (const auto& e : img)
                    if (!e.is_zero()) {
                        if (why) *why = "homology vector is not a cycle in degree " + std::to_string(i);
                        return false;
                    }
            }
        }
        // Independence modulo boundaries: [boundary basis | h_i] has full rank.
        const int nb = s.rank[static_cast<size_t>(i) + 1];
        FieldMatrix probe = FieldMatrix::zero(n, nb + static_cast<int>(hi.size()), c.nvars);
        for (int j = 0; j < nb; ++j) {
            auto col = c.boundary(i + 1).col(s.pivots[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            for (int r = 0; r < n; ++r) probe.at(r, j) = col[static_cast<size_t>(r)];
        }
        for (size_t j = 0; j < hi.size(); ++j)
            for (int r = 0; r < n; ++r) probe.at(r, nb + static_cast<int>(j)) = hi[j][static_cast<size_t>(r)];
        if (rank_kernel(probe).rank != probe.cols) {
            if (why) *why = "homology classes are dependent in degree " + std::to_string(i);
            return false;
        }
    }
    return true;
}

RatFunc torsion_impl(const BasedChainComplex& c, const HomologyBasis& h,
                     const std::vector<std::vector<int>>* orders) {
    c.validate();
    TorsionSetup s = make_setup(c, orders);
    std::string why;
    if (!check_homology_basis(c, s, h, &why)) throw std::invalid_argument("torsion: " + why);

    const int m = c.length();
    RatFunc tau = RatFunc::one(c.nvars);
    for (int i = 0; i <= m; ++i) {
        const int n = c.dims[static_cast<size_t>(i)];
        if (n == 0) continue;
        FieldMatrix mat = FieldMatrix::zero(n, n, c.nvars);
        int col = 0;
        if (i < m)
            for (int p : s.pivots[static_cast<size_t>(i)]) {
                auto v = c.boundary(i + 1).col(p);
                for (int r = 0; r < n; ++r) mat.at(r, col) = v[static_cast<size_t>(r)];
                ++col;
            }
        for (const auto& v : h.vectors[static_cast<size_t>(i)]) {
            for (int r = 0; r < n; ++r) mat.at(r, col) = v[static_cast<size_t>(r)];
            ++col;
        }
        if (i >= 1)
            for (int q : s.pivots[static_cast<size_t>(i) - 1]) {
                mat.at(q, col) = RatFunc::one(c.nvars);
                ++col;
            }
        if (col != n) throw std::logic_error("torsion: basis assembly mismatch");
        RatFunc d = det(mat);
        if (d.is_zero()) throw std::logic_error("torsion: singular change of basis");
        tau = (i % 2 == 0) ? tau / d : tau * d;
    }
    return tau;
}

}  // namespace

std::vector<int> homology_dims(const BasedChainComplex& c) {
    return make_setup(c, nullptr).beta;
}

bool valid_homology_basis(const BasedChainComplex& c, const HomologyBasis& h) {
    c.validate();
    TorsionSetup s = make_setup(c, nullptr);
    return check_homology_basis(c, s, h, nullptr);
}

RatFunc torsion(const BasedChainComplex& c, const HomologyBasis& h) {
    return torsion_impl(c, h, nullptr);
}

RatFunc torsion_pivots(const BasedChainComplex& c, const HomologyBasis& h,
                       const std::vector<std::vector<int>>& column_order) {
    return torsion_impl(c, h, &column_order);
}

std::function<RatFunc(const std::vector<std::vector<RatFunc>>&)> torsion_function(
    const BasedChainComplex& c, int k, const HomologyBasis& partial_h) {
    c.validate();
    TorsionSetup s = make_setup(c, nullptr);
    const int beta = s.beta[static_cast<size_t>(k)];
    return [c, k, partial_h, beta](const std::vector<std::vector<RatFunc>>& vs) -> RatFunc {
        if (static_cast<int>(vs.size()) != beta)
            throw std::invalid_argument("torsion_function: wrong number of slot vectors");
        HomologyBasis h = partial_h;
        h.vectors[static_cast<size_t>(k)] = vs;
        if (!valid_homology_basis(c, h)) {
            // Degenerate wedge (or non-cycles, which validation also rejects
            // when the vectors fail to be cycles at all).
            for (const auto& v : vs) {
                if (k >= 1) {
                    auto img = c.boundary(k).apply(v);
                    for (const auto& e : img)
                        if (!e.is_zero())
                            throw std::invalid_argument("torsion_function: slot vector is not a cycle");
                }
            }
            return RatFunc::zero(c.nvars);
        }
        RatFunc t = torsion(c, h);
        return (k % 2 != 0) ? t : RatFunc::one(c.nvars) / t;
    };
}

RatFunc ses_multiplicativity_check(const BasedChainComplex& cprime, const BasedChainComplex& c,
                                   const BasedChainComplex& csecond, const ChainMapPair& maps,
                                   const HomologyBasis& hprime, const HomologyBasis& h,
                                   const HomologyBasis& hsecond) {
    cprime.validate();
    c.validate();
    csecond.validate();
    const int m = c.length();
    if (cprime.length() != m || csecond.length() != m)
        throw std::invalid_argument("ses: lengths differ");
    if (static_cast<int>(maps.inclusion.size()) != m + 1 ||
        static_cast<int>(maps.projection.size()) != m + 1)
        throw std::invalid_argument("ses: need one inclusion/projection per degree");
    const int nv = c.nvars;

    for (int i = 0; i <= m; ++i) {
        const FieldMatrix& inc = maps.inclusion[static_cast<size_t>(i)];
        const FieldMatrix& prj = maps.projection[static_cast<size_t>(i)];
        const int n = c.dims[static_cast<size_t>(i)];
        const int np = cprime.dims[static_cast<size_t>(i)];
        const int ns = csecond.dims[static_cast<size_t>(i)];
        if (n != np + ns) throw std::invalid_argument("ses: dimensions do not add up");
        if (inc.rows != n || inc.cols != np || prj.rows != ns || prj.cols != n)
            throw std::invalid_argument("ses: map shapes wrong");
        if (rank_kernel(inc).rank != np || rank_kernel(prj).rank != ns)
            throw std::invalid_argument("ses: maps are not injective/surjective");
        FieldMatrix comp = prj * inc;
        for (const auto& e : comp.entries)
            if (!e.is_zero()) throw std::invalid_argument("ses: projection after inclusion nonzero");
        // Chain map conditions.
        if (i >= 1) {
            FieldMatrix lhs = c.boundary(i) * maps.inclusion[static_cast<size_t>(i)];
            FieldMatrix rhs = maps.inclusion[static_cast<size_t>(i) - 1] * cprime.boundary(i);
            if (!(lhs == rhs)) throw std::invalid_argument("ses: inclusion is not a chain map");
            FieldMatrix lhs2 = csecond.boundary(i) * maps.projection[static_cast<size_t>(i)];
            FieldMatrix rhs2 = maps.projection[static_cast<size_t>(i) - 1] * c.boundary(i);
            if (!(lhs2 == rhs2)) throw std::invalid_argument("ses: projection is not a chain map");
        }
        // Base compatibility: det[inc(c') | lift(c'')] must be a sign.
        FieldMatrix juxt = FieldMatrix::zero(n, n, nv);
        for (int r = 0; r < n; ++r)
            for (int q = 0; q < np; ++q) juxt.at(r, q) = inc.at(r, q);
        for (int j = 0; j < ns; ++j) {
            auto w = solve(prj, unit_vector(ns, j, nv));
            if (!w) throw std::invalid_argument("ses: projection not surjective on basis");
            for (int r = 0; r < n; ++r) juxt.at(r, np + j) = (*w)[static_cast<size_t>(r)];
        }
        RatFunc d = det(juxt);
        if (!(d == RatFunc::one(nv)) && !(d == -RatFunc::one(nv)))
            throw std::invalid_argument("ses: bases are not compatible");
    }

    TorsionSetup sp = make_setup(cprime, nullptr);
    TorsionSetup sc = make_setup(c, nullptr);
    TorsionSetup ss = make_setup(csecond, nullptr);

    // Express the homology class of a cycle z in the given homological basis:
    // solve in the columns [boundary basis | h] and read off the h-part.
    auto class_in_basis = [&](const BasedChainComplex& cc, const TorsionSetup& st,
                              const HomologyBasis& hb, int degree,
                              const std::vector<RatFunc>& z) -> std::vector<RatFunc> {
        const int n = cc.dims[static_cast<size_t>(degree)];
        const int nb = st.rank[static_cast<size_t>(degree) + 1];
        const auto& hi = hb.vectors[static_cast<size_t>(degree)];
        FieldMatrix a = FieldMatrix::zero(n, nb + static_cast<int>(hi.size()), nv);
        for (int j = 0; j < nb; ++j) {
            auto col = cc.boundary(degree + 1).col(st.pivots[static_cast<size_t>(degree)][static_cast<size_t>(j)]);
            for (int r = 0; r < n; ++r) a.at(r, j) = col[static_cast<size_t>(r)];
        }
        for (size_t j = 0; j < hi.size(); ++j)
            for (int r = 0; r < n; ++r) a.at(r, nb + static_cast<int>(j)) = hi[j][static_cast<size_t>(r)];
        auto x = solve(a, z);
        if (!x) throw std::invalid_argument("ses: cycle not expressible in homology basis");
        return std::vector<RatFunc>(x->begin() + nb, x->end());
    };

    // Long exact sequence as an acyclic complex: position 3i holds H_i(C''),
    // 3i+1 holds H_i(C), 3i+2 holds H_i(C').
    const int les_len = 3 * (m + 1) - 1;
    BasedChainComplex les;
    les.nvars = nv;
    les.dims.assign(static_cast<size_t>(les_len) + 1, 0);
    for (int i = 0; i <= m; ++i) {
        les.dims[static_cast<size_t>(3 * i)] = ss.beta[static_cast<size_t>(i)];
        les.dims[static_cast<size_t>(3 * i) + 1] = sc.beta[static_cast<size_t>(i)];
        les.dims[static_cast<size_t>(3 * i) + 2] = sp.beta[static_cast<size_t>(i)];
    }
    les.boundaries.assign(static_cast<size_t>(les_len), FieldMatrix{});
    auto set_les = [&](int pos, FieldMatrix mtx) {  // boundary from position pos to pos-1
        les.boundaries[static_cast<size_t>(pos) - 1] = std::move(mtx);
    };
    for (int i = 0; i <= m; ++i) {
        const int bp = sp.beta[static_cast<size_t>(i)];
        const int bc = sc.beta[static_cast<size_t>(i)];
        const int bs = ss.beta[static_cast<size_t>(i)];
        // H_i(C') -> H_i(C)
        FieldMatrix fi = FieldMatrix::zero(bc, bp, nv);
        for (int j = 0; j < bp; ++j) {
            auto img = maps.inclusion[static_cast<size_t>(i)].apply(
                hprime.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            auto cls = class_in_basis(c, sc, h, i, img);
            for (int r = 0; r < bc; ++r) fi.at(r, j) = cls[static_cast<size_t>(r)];
        }
        set_les(3 * i + 2, std::move(fi));
        // H_i(C) -> H_i(C'')
        FieldMatrix gi = FieldMatrix::zero(bs, bc, nv);
        for (int j = 0; j < bc; ++j) {
            auto img = maps.projection[static_cast<size_t>(i)].apply(
                h.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            auto cls = class_in_basis(csecond, ss, hsecond, i, img);
            for (int r = 0; r < bs; ++r) gi.at(r, j) = cls[static_cast<size_t>(r)];
        }
        set_les(3 * i + 1, std::move(gi));
        // Connecting H_i(C'') -> H_{i-1}(C')
        if (i >= 1) {
            const int bprev = sp.beta[static_cast<size_t>(i) - 1];
            FieldMatrix di = FieldMatrix::zero(bprev, bs, nv);
            for (int j = 0; j < bs; ++j) {
                auto w = solve(maps.projection[static_cast<size_t>(i)],
                               hsecond.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (!w) throw std::invalid_argument("ses: cannot lift cycle through projection");
                auto dw = c.boundary(i).apply(*w);
                auto u = solve(maps.inclusion[static_cast<size_t>(i) - 1], dw);
                if (!u) throw std::invalid_argument("ses: boundary of lift is not in the subcomplex");
                auto cls = class_in_basis(cprime, sp, hprime, i - 1, *u);
                for (int r = 0; r < bprev; ++r) di.at(r, j) = cls[static_cast<size_t>(r)];
            }
            set_les(3 * i, std::move(di));
        }
    }

    HomologyBasis empty;
    empty.vectors.assign(static_cast<size_t>(les_len) + 1, {});
    RatFunc tau_les = torsion(les, empty);  // validates exactness of the sequence

    RatFunc tau_c = torsion(c, h);
    RatFunc tau_p = torsion(cprime, hprime);
    RatFunc tau_s = torsion(csecond, hsecond);
    return tau_c / (tau_p * tau_s * tau_les);
}

}  // namespace alexr
