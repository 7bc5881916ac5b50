// Exact arithmetic in the group ring Z[G] for G = Z^n (multivariate Laurent
// polynomials with big-integer coefficients), its fraction field, and the
// unit group +-G of signed monomials.
//
// The number of variables n is fixed per session and carried by every value;
// mixing values with different variable counts throws.  Fractions are kept
// unreduced for n >= 2 (equality is tested by cross-multiplication) and are
// reduced to lowest terms for n <= 1, where a univariate gcd is available.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alexr {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector of a monomial t1^e1 ... tn^en.  Lexicographic order of the
// underlying vector is the term order used throughout.
using ExpVec = std::vector<int>;

ExpVec exp_zero(int nvars);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
ExpVec exp_neg(const ExpVec& a);

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(check_nvars(nvars)) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, BigInt c);
    static LaurentPoly monomial(int nvars, const ExpVec& e, BigInt c = 1);
    // t_i (0-based variable index)
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<ExpVec, BigInt>& terms() const { return terms_; }

    // +-t^e, the unit group of Z[G]; nullopt if not a signed monomial.
    std::optional<std::pair<int, ExpVec>> as_unit() const;

    void add_term(const ExpVec& e, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // Sum of coefficients, i.e. the value at t1 = ... = tn = 1.
    BigInt eval_at_one() const;

private:
    static int check_nvars(int n);

    int nvars_ = 0;
    std::map<ExpVec, BigInt> terms_;  // no zero coefficients stored
};

// Bar involution t^e -> t^-e, extended additively.  A ring automorphism.
LaurentPoly involute(const LaurentPoly& f);

// Exact division in the Laurent ring.  Returns nullopt if b does not divide a
// (integer coefficient quotients included); throws if b = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// gcd over Z[t^+-1], up to a unit; canonicalized so the lowest exponent is 0
// and its coefficient positive.  Only defined for sessions with n <= 1
// (multivariate gcd is out of scope); the gcd of an empty list or of all-zero
// inputs is 0.
LaurentPoly gcd_univariate(const std::vector<LaurentPoly>& ps);

// A unit +-t^e of Z[G].
struct MonomialUnit {
    int sign = 1;  // +1 or -1
    ExpVec monomial;

    static MonomialUnit one(int nvars) { return MonomialUnit{1, exp_zero(nvars)}; }
    MonomialUnit inverse() const { return MonomialUnit{sign, exp_neg(monomial)}; }
    LaurentPoly poly(int nvars) const { return LaurentPoly::monomial(nvars, monomial, sign); }

    friend MonomialUnit operator*(const MonomialUnit& a, const MonomialUnit& b) {
        return MonomialUnit{a.sign * b.sign, exp_add(a.monomial, b.monomial)};
    }
    friend bool operator==(const MonomialUnit& a, const MonomialUnit& b) = default;
};

// Element of the fraction field Q(G).  den is never zero.  For n <= 1 the
// fraction is reduced and the denominator unit-normalized on construction.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc zero(int nvars) { return RatFunc(LaurentPoly::zero(nvars), LaurentPoly::constant(nvars, 1)); }
    static RatFunc one(int nvars) { return from_poly(LaurentPoly::constant(nvars, 1)); }
    static RatFunc from_poly(LaurentPoly p);
    static RatFunc constant(int nvars, BigInt c) { return from_poly(LaurentPoly::constant(nvars, c)); }

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws on b = 0
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    // Equality by cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    // If the value lies in Z[G], its polynomial form.
    std::optional<LaurentPoly> as_poly() const { return divide_exact(num_, den_); }

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly::constant(0, 1);
};

RatFunc involute(const RatFunc& f);

// The unit u with a = u*b, if one exists.  (0,0) yields +1 by convention.
std::optional<MonomialUnit> unit_quotient(const RatFunc& a, const RatFunc& b);
std::optional<MonomialUnit> unit_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Canonical representative of the +-G orbit of f: the lexicographically least
// exponent of the numerator is shifted to zero and its coefficient made
// positive.  Returns (f0, u) with f = u * f0; 0 normalizes to (0, +1).
std::pair<RatFunc, MonomialUnit> normalize_unit(const RatFunc& f);
std::pair<LaurentPoly, MonomialUnit> normalize_unit(const LaurentPoly& f);

MonomialUnit unit_mul(const MonomialUnit& u, int sign, const ExpVec& e);
RatFunc unit_apply(const MonomialUnit& u, const RatFunc& f);

// Bit-exact text rendering: terms sorted lex by exponent, e.g.
// "-1 + 2*t1 + t1^2*t2^-1"; single-variable sessions use bare "t".
std::string render(const LaurentPoly& f);
std::string render(const RatFunc& f);
std::string render(const MonomialUnit& u, int nvars);

void check_same_vars(int a, int b, const char* where);

}  // namespace alexr
