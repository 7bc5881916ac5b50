#include "alexr/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alexr {

void check_same_vars(int a, int b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": mixed variable counts " +
                                    std::to_string(a) + " vs " + std::to_string(b));
}

ExpVec exp_zero(int nvars) { return ExpVec(static_cast<size_t>(nvars), 0); }

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    check_same_vars(static_cast<int>(a.size()), static_cast<int>(b.size()), "exp_add");
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    check_same_vars(static_cast<int>(a.size()), static_cast<int>(b.size()), "exp_sub");
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_neg(const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

int LaurentPoly::check_nvars(int n) {
    if (n < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
    return n;
}

LaurentPoly LaurentPoly::constant(int nvars, BigInt c) {
    LaurentPoly p(nvars);
    p.add_term(exp_zero(nvars), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExpVec& e, BigInt c) {
    LaurentPoly p(nvars);
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("LaurentPoly::variable: index out of range");
    ExpVec e = exp_zero(nvars);
    e[static_cast<size_t>(i)] = 1;
    return monomial(nvars, e, 1);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == exp_zero(nvars_) &&
           terms_.begin()->second == 1;
}

std::optional<std::pair<int, ExpVec>> LaurentPoly::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (c == 1) return std::make_pair(1, e);
    if (c == -1) return std::make_pair(-1, e);
    return std::nullopt;
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(nvars_, o.nvars_, "LaurentPoly+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(nvars_, o.nvars_, "LaurentPoly-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a.nvars_, b.nvars_, "LaurentPoly*");
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly involute(const LaurentPoly& f) {
    LaurentPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(exp_neg(e), c);
    return r;
}

namespace {

// Per-variable minimum exponent over all terms; zero vector for f = 0.
ExpVec min_exponents(const LaurentPoly& f) {
    ExpVec m = exp_zero(f.nvars());
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly shift(const LaurentPoly& f, const ExpVec& by) {
    LaurentPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(exp_add(e, by), c);
    return r;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a.nvars(), b.nvars(), "divide_exact");
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (a.is_zero()) return LaurentPoly::zero(a.nvars());

    // Shift both operands into the ordinary polynomial ring; monomials are
    // units of the Laurent ring, so divisibility is unaffected.
    const ExpVec ma = min_exponents(a), mb = min_exponents(b);
    LaurentPoly rem = shift(a, exp_neg(ma));
    const LaurentPoly d = shift(b, exp_neg(mb));
    const auto& [elead, clead] = *d.terms().rbegin();  // lex-leading term of d

    LaurentPoly q(a.nvars());
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms().rbegin();
        ExpVec eq = exp_sub(er, elead);
        if (std::any_of(eq.begin(), eq.end(), [](int x) { return x < 0; })) return std::nullopt;
        if (cr % clead != 0) return std::nullopt;
        BigInt cq = cr / clead;
        q.add_term(eq, cq);
        rem -= LaurentPoly::monomial(a.nvars(), eq, cq) * d;
    }
    return shift(q, exp_sub(ma, mb));
}

namespace {

// Univariate helpers for the gcd; polynomials are in Z[t] (exponents >= 0).

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt content(const LaurentPoly& f) {
    BigInt g = 0;
    for (const auto& [e, c] : f.terms()) g = int_gcd(g, c);
    return g;
}

LaurentPoly scale_down(const LaurentPoly& f, const BigInt& d) {
    LaurentPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c / d);
    return r;
}

int degree1(const LaurentPoly& f) { return f.terms().rbegin()->first[0]; }

// Pseudo-remainder of a by b in Z[t] (nvars = 1, b != 0).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const int db = degree1(b);
    const BigInt lb = b.terms().rbegin()->second;
    while (!a.is_zero() && degree1(a) >= db) {
        const auto& [ea, ca] = *a.terms().rbegin();
        ExpVec shift_e{ea[0] - db};
        LaurentPoly t = LaurentPoly::monomial(1, shift_e, ca);
        // a := lb*a - t*b kills the leading term of a.
        a = LaurentPoly::constant(1, lb) * a - t * b;
    }
    return a;
}

LaurentPoly primitive_part(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    return scale_down(f, content(f));
}

LaurentPoly gcd_pair_univ(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Drop monomial factors (units of the Laurent ring).
    a = shift(a, exp_neg(min_exponents(a)));
    b = shift(b, exp_neg(min_exponents(b)));
    BigInt cg = int_gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (degree1(a) < degree1(b)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(a, b));
        a = b;
        b = r;
    }
    return LaurentPoly::constant(1, cg) * a;
}

}  // namespace

LaurentPoly gcd_univariate(const std::vector<LaurentPoly>& ps) {
    int nvars = ps.empty() ? 1 : ps.front().nvars();
    if (nvars >= 2) throw std::invalid_argument("gcd_univariate: multivariate gcd not supported");
    if (ps.empty()) return LaurentPoly::zero(nvars);

    if (nvars == 0) {
        BigInt g = 0;
        for (const auto& p : ps) {
            check_same_vars(p.nvars(), 0, "gcd_univariate");
            g = int_gcd(g, p.eval_at_one());
        }
        return LaurentPoly::constant(0, g);
    }

    LaurentPoly g = LaurentPoly::zero(1);
    for (const auto& p : ps) {
        check_same_vars(p.nvars(), 1, "gcd_univariate");
        g = gcd_pair_univ(g, p);
    }
    return normalize_unit(g).first;
}

std::pair<LaurentPoly, MonomialUnit> normalize_unit(const LaurentPoly& f) {
    if (f.is_zero()) return {f, MonomialUnit::one(f.nvars())};
    const auto& [e, c] = *f.terms().begin();
    MonomialUnit u{c > 0 ? 1 : -1, e};
    LaurentPoly f0 = shift(c > 0 ? f : -f, exp_neg(e));
    return {f0, u};
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_vars(num_.nvars(), den_.nvars(), "RatFunc");
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.nvars(), 1);
        return;
    }
    if (nvars() <= 1) {
        LaurentPoly g = gcd_univariate({num_, den_});
        if (!g.is_one()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    // Pull the denominator's unit factor into the numerator.
    auto [d0, u] = normalize_unit(den_);
    if (!(u == MonomialUnit::one(nvars()))) {
        den_ = d0;
        num_ = unit_apply(u.inverse(), RatFunc::from_poly(num_)).num();
    }
}

RatFunc RatFunc::from_poly(LaurentPoly p) {
    RatFunc f;
    int n = p.nvars();
    f.num_ = std::move(p);
    f.den_ = LaurentPoly::constant(n, 1);
    return f;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    check_same_vars(a.nvars(), b.nvars(), "RatFunc+");
    if (a.den() == b.den()) return RatFunc(a.num() + b.num(), a.den());
    return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    check_same_vars(a.nvars(), b.nvars(), "RatFunc*");
    return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    check_same_vars(a.nvars(), b.nvars(), "RatFunc/");
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(a.num() * b.den(), a.den() * b.num());
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    check_same_vars(a.nvars(), b.nvars(), "RatFunc==");
    return a.num() * b.den() == b.num() * a.den();
}

RatFunc involute(const RatFunc& f) { return RatFunc(involute(f.num()), involute(f.den())); }

std::optional<MonomialUnit> unit_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    return unit_quotient(RatFunc::from_poly(a), RatFunc::from_poly(b));
}

std::optional<MonomialUnit> unit_quotient(const RatFunc& a, const RatFunc& b) {
    check_same_vars(a.nvars(), b.nvars(), "unit_quotient");
    const int n = a.nvars();
    if (a.is_zero() && b.is_zero()) return MonomialUnit::one(n);
    if (a.is_zero() || b.is_zero()) return std::nullopt;

    // a = u*b  <=>  p = u*q with p := num_a*den_b, q := num_b*den_a.
    LaurentPoly p = a.num() * b.den();
    LaurentPoly q = b.num() * a.den();
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    const auto& [ep, cp] = *p.terms().begin();
    const auto& [eq, cq] = *q.terms().begin();
    int sign;
    if (cp == cq)
        sign = 1;
    else if (cp == -cq)
        sign = -1;
    else
        return std::nullopt;
    MonomialUnit u{sign, exp_sub(ep, eq)};
    if (p == u.poly(n) * q) return u;
    return std::nullopt;
}

std::pair<RatFunc, MonomialUnit> normalize_unit(const RatFunc& f) {
    if (f.is_zero()) return {f, MonomialUnit::one(f.nvars())};
    auto [n0, u] = normalize_unit(f.num());
    return {RatFunc(n0, f.den()), u};
}

MonomialUnit unit_mul(const MonomialUnit& u, int sign, const ExpVec& e) {
    return MonomialUnit{u.sign * sign, exp_add(u.monomial, e)};
}

RatFunc unit_apply(const MonomialUnit& u, const RatFunc& f) {
    return RatFunc(u.poly(f.nvars()) * f.num(), f.den());
}

namespace {

std::string var_name(int nvars, int i) {
    return nvars == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

std::string monomial_str(int nvars, const ExpVec& e) {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        int x = e[static_cast<size_t>(i)];
        if (x == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(nvars, i);
        if (x != 1) s += "^" + std::to_string(x);
    }
    return s;
}

}  // namespace

std::string render(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        BigInt ab = c < 0 ? BigInt(-c) : c;
        std::string mono = monomial_str(f.nvars(), e);
        std::string body;
        if (mono.empty())
            body = ab.str();
        else if (ab == 1)
            body = mono;
        else
            body = ab.str() + "*" + mono;
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string render(const RatFunc& f) {
    if (f.den().is_one()) return render(f.num());
    if (auto q = f.as_poly()) return render(*q);  // exact quotients print reduced
    return "(" + render(f.num()) + ") / (" + render(f.den()) + ")";
}

std::string render(const MonomialUnit& u, int nvars) {
    std::string m = monomial_str(nvars, u.monomial);
    if (m.empty()) m = "1";
    return (u.sign < 0 ? "-" : "+") + m;
}

}  // namespace alexr
