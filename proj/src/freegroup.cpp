#include "alexr/freegroup.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace alexr {

Word::Word(std::vector<int> letters) {
    for (int x : letters) {
        if (x == 0) throw std::invalid_argument("Word: zero letter");
        if (!letters_.empty() && letters_.back() == -x)
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
}

Word Word::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& x : rev) x = -x;
    Word w;
    w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
    return w;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<int> cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(cat));
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string ps = tok.substr(caret + 1);
            size_t used = 0;
            power = std::stoi(ps, &used);
            if (used != ps.size()) throw std::invalid_argument("parse_word: bad power in '" + tok + "'");
        }
        int idx = -1;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) {
                idx = static_cast<int>(i) + 1;
                break;
            }
        if (idx < 0) throw std::invalid_argument("parse_word: unknown generator '" + name + "'");
        int letter = power >= 0 ? idx : -idx;
        for (int i = 0; i < std::abs(power); ++i) letters.push_back(letter);
    }
    return Word(std::move(letters));
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    size_t i = 0;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        int idx = std::abs(ls[i]) - 1;
        int power = static_cast<int>(j - i) * (ls[i] > 0 ? 1 : -1);
        if (!out.empty()) out += " ";
        out += names[static_cast<size_t>(idx)];
        if (power != 1) out += "^" + std::to_string(power);
        i = j;
    }
    return out;
}

std::vector<std::string> x_names(int count) {
    std::vector<std::string> n;
    for (int i = 1; i <= count; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

std::vector<std::string> surface_names(int k) {
    std::vector<std::string> n;
    for (int i = 1; i <= k; ++i) n.push_back("a" + std::to_string(i));
    for (int i = 1; i <= k; ++i) n.push_back("b" + std::to_string(i));
    return n;
}

ExpVec AbelMap::eval(const Word& w) const {
    ExpVec e = exp_zero(nvars);
    for (int x : w.letters()) {
        const ExpVec& img = images.at(static_cast<size_t>(std::abs(x)) - 1);
        e = x > 0 ? exp_add(e, img) : exp_sub(e, img);
    }
    return e;
}

LaurentPoly AbelMap::eval_poly(const Word& w) const {
    return LaurentPoly::monomial(nvars, eval(w), 1);
}

LaurentPoly fox_abel(const Word& w, int j, const AbelMap& phi) {
    if (j < 1 || j > static_cast<int>(phi.images.size()))
        throw std::invalid_argument("fox_abel: generator index out of range");
    LaurentPoly result(phi.nvars);
    ExpVec prefix = exp_zero(phi.nvars);
    for (int x : w.letters()) {
        const ExpVec& img = phi.images[static_cast<size_t>(std::abs(x)) - 1];
        if (x > 0) {
            if (x == j) result.add_term(prefix, 1);
            prefix = exp_add(prefix, img);
        } else {
            prefix = exp_sub(prefix, img);
            if (-x == j) result.add_term(prefix, -1);
        }
    }
    return result;
}

bool fundamental_identity_check(const Word& w, const AbelMap& phi) {
    LaurentPoly lhs(phi.nvars);
    const LaurentPoly one = LaurentPoly::constant(phi.nvars, 1);
    for (int j = 1; j <= static_cast<int>(phi.images.size()); ++j) {
        LaurentPoly xj = LaurentPoly::monomial(phi.nvars, phi.images[static_cast<size_t>(j) - 1], 1);
        lhs += fox_abel(w, j, phi) * (xj - one);
    }
    return lhs == phi.eval_poly(w) - one;
}

FreeHom identity_hom(int generators) {
    FreeHom f;
    for (int i = 1; i <= generators; ++i) {
        f.fwd.push_back(Word::generator(i));
        f.inv.push_back(Word::generator(i));
    }
    return f;
}

namespace {

Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (int x : w.letters()) {
        const Word& img = images.at(static_cast<size_t>(std::abs(x)) - 1);
        out = out * (x > 0 ? img : img.inverse());
    }
    return out;
}

}  // namespace

Word apply_hom(const FreeHom& f, const Word& w) { return substitute(w, f.fwd); }
Word apply_hom_inverse(const FreeHom& f, const Word& w) { return substitute(w, f.inv); }

FreeHom compose(const FreeHom& f, const FreeHom& g) {
    if (f.generators() != g.generators())
        throw std::invalid_argument("compose: generator count mismatch");
    FreeHom h;
    for (int i = 0; i < f.generators(); ++i) {
        h.fwd.push_back(apply_hom(f, g.fwd[static_cast<size_t>(i)]));
        h.inv.push_back(apply_hom_inverse(g, f.inv[static_cast<size_t>(i)]));
    }
    return h;
}

FreeHom inverse(const FreeHom& f) { return FreeHom{f.inv, f.fwd}; }

bool valid_inverse_pair(const FreeHom& f) {
    if (f.fwd.size() != f.inv.size()) return false;
    for (int i = 1; i <= f.generators(); ++i) {
        Word g = Word::generator(i);
        if (!(substitute(apply_hom(f, g), f.inv) == g)) return false;
        if (!(substitute(apply_hom_inverse(f, g), f.fwd) == g)) return false;
    }
    return true;
}

Word boundary_word(int k) {
    Word w;
    for (int i = 1; i <= k; ++i) {
        Word a = Word::generator(i), b = Word::generator(k + i);
        w = w * a * b * a.inverse() * b.inverse();
    }
    return w;
}

bool fixes_boundary(const FreeHom& f) {
    if (!valid_inverse_pair(f)) return false;
    if (f.generators() % 2 != 0) return false;
    Word bd = boundary_word(f.generators() / 2);
    return apply_hom(f, bd) == bd;
}

FieldMatrix fox_jacobian(const FreeHom& f, const AbelMap& phi_plus) {
    const int n = f.generators();
    if (static_cast<int>(phi_plus.images.size()) != n)
        throw std::invalid_argument("fox_jacobian: abelianization arity mismatch");
    FieldMatrix m = FieldMatrix::zero(n, n, phi_plus.nvars);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, j) = RatFunc::from_poly(fox_abel(f.fwd[static_cast<size_t>(j)], i + 1, phi_plus));
    return m;
}

std::vector<FreeHom> twist_library(int k) {
    if (k < 1) throw std::invalid_argument("twist_library: k must be >= 1");
    std::vector<FreeHom> lib;
    for (int i = 1; i <= k; ++i) {
        const Word a = Word::generator(i), b = Word::generator(k + i);
        for (int dir : {+1, -1}) {
            FreeHom alpha_twist = identity_hom(2 * k);  // alpha_i -> alpha_i beta_i^dir
            alpha_twist.fwd[static_cast<size_t>(i) - 1] = a * (dir > 0 ? b : b.inverse());
            alpha_twist.inv[static_cast<size_t>(i) - 1] = a * (dir > 0 ? b.inverse() : b);
            lib.push_back(std::move(alpha_twist));

            FreeHom beta_twist = identity_hom(2 * k);  // beta_i -> beta_i alpha_i^dir
            beta_twist.fwd[static_cast<size_t>(k + i) - 1] = b * (dir > 0 ? a : a.inverse());
            beta_twist.inv[static_cast<size_t>(k + i) - 1] = b * (dir > 0 ? a.inverse() : a);
            lib.push_back(std::move(beta_twist));
        }
    }
    for (const auto& f : lib)
        if (!fixes_boundary(f)) throw std::logic_error("twist_library: boundary word not fixed");
    return lib;
}

}  // namespace alexr
