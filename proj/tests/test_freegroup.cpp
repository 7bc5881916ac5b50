#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexr/freegroup.hpp"
#include "alexr/rng.hpp"

using namespace alexr;

namespace {

// Independent oracle: the textbook recursion d(uv) = du + phi(u) dv applied
// by splitting the word in half, rather than the linear scan used by the
// implementation.
LaurentPoly fox_recursive(const std::vector<int>& letters, int j, const AbelMap& phi) {
    const int nv = phi.nvars;
    if (letters.empty()) return LaurentPoly::zero(nv);
    if (letters.size() == 1) {
        int x = letters[0];
        LaurentPoly r(nv);
        if (x == j) r.add_term(exp_zero(nv), 1);
        if (x == -j) r.add_term(exp_neg(phi.images[static_cast<size_t>(j) - 1]), -1);
        return r;
    }
    size_t half = letters.size() / 2;
    std::vector<int> u(letters.begin(), letters.begin() + static_cast<long>(half));
    std::vector<int> v(letters.begin() + static_cast<long>(half), letters.end());
    ExpVec pu = exp_zero(nv);
    for (int x : u) {
        const ExpVec& img = phi.images[static_cast<size_t>(std::abs(x)) - 1];
        pu = x > 0 ? exp_add(pu, img) : exp_sub(pu, img);
    }
    return fox_recursive(u, j, phi) +
           LaurentPoly::monomial(nv, pu, 1) * fox_recursive(v, j, phi);
}

Word random_word(Rng& rng, int gens, int len) {
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) {
        int g = rng.range(1, gens);
        ls.push_back(rng.percent(50) ? g : -g);
    }
    return Word(std::move(ls));
}

AbelMap random_abel(Rng& rng, int gens, int nv) {
    AbelMap a;
    a.nvars = nv;
    for (int i = 0; i < gens; ++i) {
        ExpVec e = exp_zero(nv);
        for (int v = 0; v < nv; ++v) e[static_cast<size_t>(v)] = rng.range(-2, 2);
        a.images.push_back(e);
    }
    return a;
}

const AbelMap phi_t{1, {ExpVec{1}, ExpVec{1}}};

}  // namespace

TEST_CASE("free reduction") {
    auto names = x_names(2);
    CHECK(parse_word("x1 x1^-1", names).empty());
    CHECK(parse_word("x1 x2 x2^-1 x1^-1", names).empty());
    CHECK(parse_word("x1 x2 x1^-1 x2^-1", names).letters() == std::vector<int>{1, 2, -1, -2});
    CHECK(render_word(parse_word("x1 x1 x2^-2", names), names) == "x1^2 x2^-2");
    CHECK_THROWS_AS(parse_word("y1", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1^", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1^2b", names), std::invalid_argument);
    CHECK_THROWS(parse_word("x1^99999999999999999999", names));
    CHECK(parse_word("", names).empty());
    CHECK(parse_word("x1^0", names).empty());

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        // confluence: reducing the concatenation equals reducing the halves first
        std::vector<int> raw;
        for (int k = 0; k < 8; ++k) {
            int g = rng.range(1, 3);
            raw.push_back(rng.percent(50) ? g : -g);
        }
        std::vector<int> left(raw.begin(), raw.begin() + 4), right(raw.begin() + 4, raw.end());
        CHECK(Word(raw) == Word(left) * Word(right));
    }
}

TEST_CASE("fox derivative defining rules") {
    auto names = x_names(2);
    Word xy = parse_word("x1 x2", names);
    CHECK(fox_abel(xy, 1, phi_t) == LaurentPoly::constant(1, 1));
    CHECK(fox_abel(xy, 2, phi_t) == LaurentPoly::variable(1, 0));

    Word trefoil = parse_word("x1 x2 x1 x2^-1 x1^-1 x2^-1", names);
    LaurentPoly t = LaurentPoly::variable(1, 0), one = LaurentPoly::constant(1, 1);
    CHECK(fox_abel(trefoil, 1, phi_t) == one - t + t * t);
    CHECK(fox_abel(trefoil, 1, phi_t) == fox_recursive(trefoil.letters(), 1, phi_t));
    CHECK_THROWS_AS(fox_abel(trefoil, 3, phi_t), std::invalid_argument);
    CHECK_THROWS_AS(fox_abel(trefoil, 0, phi_t), std::invalid_argument);
}

TEST_CASE("fox derivative agrees with the split recursion") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        int gens = rng.range(1, 4);
        AbelMap phi = random_abel(rng, gens, 2);
        Word w = random_word(rng, gens, rng.range(0, 8));
        for (int j = 1; j <= gens; ++j)
            CHECK(fox_abel(w, j, phi) == fox_recursive(w.letters(), j, phi));
    }
}

TEST_CASE("fundamental identity") {
    auto names = x_names(2);
    CHECK(fundamental_identity_check(parse_word("x1 x2 x1 x2^-1 x1^-1 x2^-1", names), phi_t));
    CHECK(fundamental_identity_check(Word(), phi_t));
    // w = x^-1: (-t^-1)(t - 1) = t^-1 - 1
    AbelMap phi1{1, {ExpVec{1}}};
    CHECK(fundamental_identity_check(parse_word("x1^-1", x_names(1)), phi1));

    Rng rng(29);
    for (int i = 0; i < 1000; ++i) {
        int gens = rng.range(1, 4);
        AbelMap phi = random_abel(rng, gens, rng.range(0, 2));
        CHECK(fundamental_identity_check(random_word(rng, gens, rng.range(0, 10)), phi));
    }
}

TEST_CASE("fox jacobian layout") {
    // identity
    Rng rng0(1);
    AbelMap phi = random_abel(rng0, 2, 2);
    FieldMatrix id = fox_jacobian(identity_hom(2), phi);
    CHECK(id == FieldMatrix::identity(2, 2));

    // k=1, alpha -> alpha beta at phi(alpha) = a, phi(beta) = b: [[1, 0], [a, 1]]
    AbelMap ab{2, {ExpVec{1, 0}, ExpVec{0, 1}}};
    FreeHom f = identity_hom(2);
    f.fwd[0] = Word({1, 2});
    f.inv[0] = Word({1, -2});
    REQUIRE(valid_inverse_pair(f));
    FieldMatrix m = fox_jacobian(f, ab);
    CHECK(m.at(0, 0) == RatFunc::one(2));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0) == RatFunc::from_poly(LaurentPoly::monomial(2, {1, 0})));
    CHECK(m.at(1, 1) == RatFunc::one(2));
}

TEST_CASE("jacobian chain rule on random twist composites") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        int k = rng.range(1, 2);
        auto lib = twist_library(k);
        FreeHom f = lib[static_cast<size_t>(rng.range(0, static_cast<int>(lib.size()) - 1))];
        FreeHom g = lib[static_cast<size_t>(rng.range(0, static_cast<int>(lib.size()) - 1))];
        for (int extra = rng.range(0, 2); extra > 0; --extra)
            g = compose(g, lib[static_cast<size_t>(rng.range(0, static_cast<int>(lib.size()) - 1))]);
        AbelMap psi_plus = random_abel(rng, 2 * k, 2);
        // abelianization below f: psi_mid(x_j) = psi_plus(f(x_j))
        AbelMap psi_mid{2, {}};
        for (int j = 0; j < 2 * k; ++j)
            psi_mid.images.push_back(psi_plus.eval(f.fwd[static_cast<size_t>(j)]));
        FieldMatrix lhs = fox_jacobian(compose(f, g), psi_plus);
        FieldMatrix rhs = fox_jacobian(f, psi_plus) * fox_jacobian(g, psi_mid);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twist library") {
    for (int k = 1; k <= 3; ++k) {
        auto lib = twist_library(k);
        CHECK(lib.size() == static_cast<size_t>(4 * k));
        Word bd = boundary_word(k);
        for (const auto& f : lib) {
            CHECK(valid_inverse_pair(f));
            CHECK(fixes_boundary(f));
            CHECK(apply_hom(f, bd) == bd);
            FreeHom round = compose(f, inverse(f));
            CHECK(round == identity_hom(2 * k));
        }
    }
    // k=1 worked example: beta -> beta alpha fixes [alpha, beta]
    FreeHom tb = identity_hom(2);
    tb.fwd[1] = Word({2, 1});
    tb.inv[1] = Word({2, -1});
    CHECK(apply_hom(tb, boundary_word(1)) == boundary_word(1));

    // abelianized matrix of alpha -> alpha beta at trivial phi (n = 0) is the
    // integer transvection [[1, 0], [1, 1]]
    AbelMap trivial{0, {ExpVec{}, ExpVec{}}};
    FreeHom ta = identity_hom(2);
    ta.fwd[0] = Word({1, 2});
    ta.inv[0] = Word({1, -2});
    FieldMatrix m = fox_jacobian(ta, trivial);
    CHECK(m.at(0, 0) == RatFunc::one(0));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0) == RatFunc::one(0));
    CHECK(m.at(1, 1) == RatFunc::one(0));
}

TEST_CASE("twist composites have invertible jacobians") {
    Rng rng(37);
    for (int i = 0; i < 40; ++i) {
        int k = rng.range(1, 2);
        auto lib = twist_library(k);
        FreeHom f = identity_hom(2 * k);
        for (int n = rng.range(1, 4); n > 0; --n)
            f = compose(f, lib[static_cast<size_t>(rng.range(0, static_cast<int>(lib.size()) - 1))]);
        AbelMap phi = random_abel(rng, 2 * k, 1);
        CHECK_FALSE(det(fox_jacobian(f, phi)).is_zero());
    }
}
