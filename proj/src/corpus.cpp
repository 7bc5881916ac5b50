#include "alexr/corpus.hpp"

namespace alexr {
namespace corpus {

namespace {

std::vector<ExpVec> all_t(int count) { return std::vector<ExpVec>(static_cast<size_t>(count), ExpVec{1}); }

}  // namespace

KnotInput unknot() {
    KnotInput k;
    k.nvars = 1;
    k.generators = 1;
    k.phi = all_t(1);
    k.meridian = parse_word("x1", x_names(1));
    k.parallel = k.meridian;
    k.validate();
    return k;
}

KnotInput trefoil() {
    KnotInput k;
    k.nvars = 1;
    k.generators = 2;
    auto names = x_names(2);
    k.relators = {parse_word("x1 x2 x1 x2^-1 x1^-1 x2^-1", names)};
    k.phi = all_t(2);
    k.meridian = parse_word("x1", names);
    k.parallel = parse_word("x1 x2 x1 x2 x1 x2 x1^-6", names);
    k.validate();
    return k;
}

KnotInput figure_eight() {
    // Closure of (s1 s2^-1)^2 on three strands: arcs x1, x2, x3, x4 (x4 is
    // the new arc after the first crossing); one Wirtinger relator dropped.
    KnotInput k;
    k.nvars = 1;
    k.generators = 4;
    auto names = x_names(4);
    k.relators = {
        parse_word("x4^-1 x1 x2 x1^-1", names),       // x4 = x1 x2 x1^-1
        parse_word("x2^-1 x3^-1 x1 x3", names),       // x2 = x3^-1 x1 x3
        parse_word("x1^-1 x4 x3 x4^-1", names),       // x1 = x4 x3 x4^-1
    };
    k.phi = all_t(4);
    k.meridian = parse_word("x1", names);
    k.validate();
    return k;
}

KnotInput cinquefoil() {
    KnotInput k;
    k.nvars = 1;
    k.generators = 2;
    auto names = x_names(2);
    // Braid relator of s1^5: x1 x2 x1 x2 x1 = x2 x1 x2 x1 x2.
    k.relators = {parse_word("x1 x2 x1 x2 x1 x2^-1 x1^-1 x2^-1 x1^-1 x2^-1", names)};
    k.phi = all_t(2);
    k.meridian = parse_word("x1", names);
    k.validate();
    return k;
}

KnotInput s1_x_s2() {
    KnotInput k;
    k.nvars = 1;
    k.generators = 1;
    k.phi = all_t(1);
    k.meridian = Word();  // bounds a disk in the solid torus
    k.parallel = parse_word("x1", x_names(1));
    // A deficiency-one presentation with no relators; the meridian of the
    // core is null-homotopic in the exterior, so phi(meridian) != t and the
    // Alexander read-out is not available here, only the torsion ones.
    k.validate();
    return k;
}

KnotInput three_torus() {
    KnotInput k;
    k.nvars = 2;
    k.generators = 3;
    auto names = x_names(3);
    // Exterior of S^1 inside T^3 is (punctured T^2) x S^1: two commuting
    // relations against the fiber x3.
    k.relators = {parse_word("x1 x3 x1^-1 x3^-1", names),
                  parse_word("x2 x3 x2^-1 x3^-1", names)};
    k.phi = {ExpVec{1, 0}, ExpVec{0, 1}, ExpVec{1, 1}};
    k.meridian = parse_word("x1 x2 x1^-1 x2^-1", names);
    k.parallel = parse_word("x3", names);
    k.validate();
    return k;
}

CwOracle s1_x_s2_cw_complex() {
    const int nv = 1;
    LaurentPoly t = LaurentPoly::variable(nv, 0);
    LaurentPoly one = LaurentPoly::constant(nv, 1);
    RatFunc tm1 = RatFunc::from_poly(t - one);

    CwOracle c;
    c.dims = {1, 1, 1, 1};
    FieldMatrix d1 = FieldMatrix::zero(1, 1, nv);
    d1.at(0, 0) = tm1;
    FieldMatrix d2 = FieldMatrix::zero(1, 1, nv);
    FieldMatrix d3 = FieldMatrix::zero(1, 1, nv);
    d3.at(0, 0) = tm1;
    c.boundaries = {d1, d2, d3};
    return c;
}

PresentedCobordism trefoil_presented() {
    KnotInput k = trefoil();
    PresentedCobordism p;
    p.nvars = 1;
    p.generators = 2;
    p.g_minus = 1;
    p.g_plus = 0;
    p.relators = k.relators;
    p.phi = k.phi;
    p.bottom_alpha = {k.meridian};
    p.bottom_beta = {*k.parallel};
    p.validate();
    return p;
}

PresentedCobordism s1_x_s2_presented() {
    PresentedCobordism p;
    p.nvars = 1;
    p.generators = 1;
    p.g_minus = 1;
    p.g_plus = 0;
    p.phi = all_t(1);
    p.bottom_alpha = {Word()};
    p.bottom_beta = {parse_word("x1", x_names(1))};
    p.validate();
    return p;
}

}  // namespace corpus
}  // namespace alexr
