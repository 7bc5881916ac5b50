#include "alexr/duality.hpp"

#include <stdexcept>

namespace alexr {

namespace {

RatFunc mono(const ExpVec& e, int nv) {
    return RatFunc::from_poly(LaurentPoly::monomial(nv, e, 1));
}

}  // namespace

IntersectionForm intersection_matrix(const CobObject& psi) {
    psi.validate();
    const int k = psi.genus;
    const int nv = psi.nvars;
    const RatFunc one = RatFunc::one(nv);

    auto val = [&](int i) {  // psi of basis loop i (0-based over a_1..a_k, b_1..b_k)
        return i < k ? mono(psi.phi_alpha[static_cast<size_t>(i)], nv)
                     : mono(psi.phi_beta[static_cast<size_t>(i - k)], nv);
    };
    auto p = [&](int x, int y) { return (one - val(x)) * involute(one - val(y)); };

    FieldMatrix j = FieldMatrix::zero(2 * k, 2 * k, nv);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < r; ++c) {
            j.at(r, c) = p(r, c);                  // J_aa below diagonal
            j.at(r, k + c) = p(r, k + c);          // J_ab below diagonal
            j.at(k + r, c) = p(k + r, c);          // J_ba below diagonal
            j.at(k + r, k + c) = p(k + r, k + c);  // J_bb below diagonal
        }
        j.at(r, r) = one - val(r);
        j.at(r, k + r) = val(r) * involute(val(k + r));
        j.at(k + r, r) = one - involute(val(r)) - val(k + r);
        j.at(k + r, k + r) = one - involute(val(k + r));
    }
    return IntersectionForm{k, psi, std::move(j)};
}

RatFunc pair_wedge(const Multivector& x, const Multivector& y, const IntersectionForm& form) {
    const int nv = form.j.nvars;
    if (x.dim() != 2 * form.k || y.dim() != 2 * form.k)
        throw std::invalid_argument("pair_wedge: dimension mismatch");
    RatFunc out = RatFunc::zero(nv);
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            if (popcount(mx) != popcount(my))
                throw std::invalid_argument("pair_wedge: degree mismatch");
            std::vector<int> rows, cols;
            for (int i = 0; i < 2 * form.k; ++i) {
                if (mx & (1u << i)) rows.push_back(i);
                if (my & (1u << i)) cols.push_back(i);
            }
            out += cx * involute(cy) * det(submatrix(form.j, rows, cols));
        }
    }
    return out;
}

bool check_92(const IntersectionForm& form) {
    const int k = form.k;
    const int nv = form.j.nvars;
    const RatFunc one = RatFunc::one(nv);
    std::vector<RatFunc> d;
    for (int i = 0; i < k; ++i)
        d.push_back(mono(form.psi.phi_alpha[static_cast<size_t>(i)], nv) - one);
    for (int i = 0; i < k; ++i)
        d.push_back(mono(form.psi.phi_beta[static_cast<size_t>(i)], nv) - one);

    FieldMatrix rhs = involute(form.j.transpose());
    for (auto& e : rhs.entries) e = -e;
    for (int r = 0; r < 2 * k; ++r)
        for (int c = 0; c < 2 * k; ++c)
            rhs.at(r, c) += d[static_cast<size_t>(r)] * involute(d[static_cast<size_t>(c)]);
    return form.j == rhs;
}

bool pairing_preserved(const FieldMatrix& f, const IntersectionForm& source,
                       const IntersectionForm& target) {
    return f.transpose() * target.j * involute(f) == source.j;
}

namespace {

// Collects lhs/rhs sweeps over all basis pairs and decides whether one global
// unit matches them.
bool unit_matched(const std::vector<RatFunc>& lhs, const std::vector<RatFunc>& rhs) {
    std::optional<MonomialUnit> u;
    for (size_t i = 0; i < lhs.size(); ++i) {
        bool zl = lhs[i].is_zero(), zr = rhs[i].is_zero();
        if (zl != zr) return false;
        if (zl) continue;
        if (!u) {
            u = unit_quotient(lhs[i], rhs[i]);
            if (!u) return false;
        } else if (!(lhs[i] == unit_apply(*u, rhs[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool verify_duality(const HeegaardWord& w) {
    GradedMap m = eval_word(w);
    GradedMap mbar = eval_word(dual_word(w));
    IntersectionForm j_minus = intersection_matrix(w.source());
    IntersectionForm j_plus = intersection_matrix(w.target());
    const int nv = m.nvars;
    const int sd = m.src_dim, dd = m.dst_dim;

    std::vector<RatFunc> lhs, rhs;
    for (int j = m.j_min(); j <= m.j_max(); ++j) {
        for (uint32_t xm : basis_masks(sd, j)) {
            Multivector x = Multivector::basis_element(sd, nv, xm);
            Multivector mx = m.apply(x);
            for (uint32_t ym : basis_masks(dd, j + m.degree)) {
                Multivector y = Multivector::basis_element(dd, nv, ym);
                lhs.push_back(pair_wedge(mx, y, j_plus));
                rhs.push_back(pair_wedge(x, mbar.apply(y), j_minus));
            }
        }
    }
    return unit_matched(lhs, rhs);
}

bool verify_95(const HeegaardWord& w) {
    GradedMap m = eval_word(w);
    GradedMap mbar = eval_word(dual_word(w));
    const int nv = m.nvars;
    const int sd = m.src_dim, dd = m.dst_dim;
    const int g = w.source().genus + w.target().genus;

    std::vector<RatFunc> lhs, rhs;
    for (int j = 0; j <= 2 * w.source().genus; ++j) {
        if (g - j < 0 || g - j > dd) continue;
        for (uint32_t xm : basis_masks(sd, j)) {
            Multivector x = Multivector::basis_element(sd, nv, xm);
            Multivector mx = m.apply(x);
            for (uint32_t ym : basis_masks(dd, g - j)) {
                Multivector y = Multivector::basis_element(dd, nv, ym);
                RatFunc left = volume_pair(mx, y);
                RatFunc right = volume_pair(x, mbar.apply(y));
                if ((j * g) % 2 != 0) right = -right;
                lhs.push_back(left);
                rhs.push_back(right);
            }
        }
    }
    return unit_matched(lhs, rhs);
}

}  // namespace alexr
