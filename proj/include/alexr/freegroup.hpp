// Free-group words, abelianization, abelianized Fox derivatives and Fox
// Jacobians of free-group endomorphisms, plus a validated library of
// boundary-fixing mapping-class generators.
//
// Conventions frozen here: the fundamental group of the genus-k model surface
// is free on alpha_1..alpha_k, beta_1..beta_k (generator indices 1..k are the
// alphas, k+1..2k the betas) and the boundary word is the product of
// commutators [alpha_i, beta_i] in this order.

#pragma once

#include "alexr/laurent.hpp"
#include "alexr/linalg.hpp"

#include <string>
#include <vector>

namespace alexr {

// Freely reduced word; letters are +/-(1-based generator index).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    static Word generator(int i) { return Word({i}); }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);  // concatenate + reduce
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::vector<int> letters_;
};

// Word syntax: whitespace-separated letters over a fixed generator-name list,
// each optionally carrying an integer power, e.g. "x1 x2 x1^-1 x2^-1".
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string render_word(const Word& w, const std::vector<std::string>& names);

// Generator names x1..xm for presentations.
std::vector<std::string> x_names(int count);
// Generator names a1..ak, b1..bk for surface groups.
std::vector<std::string> surface_names(int k);

// Abelianization homomorphism: one exponent vector per generator.
struct AbelMap {
    int nvars = 0;
    std::vector<ExpVec> images;

    ExpVec eval(const Word& w) const;
    LaurentPoly eval_poly(const Word& w) const;  // the monomial t^phi(w)
};

// Abelianized Fox derivative of w with respect to generator j (1-based),
// computed through phi.
LaurentPoly fox_abel(const Word& w, int j, const AbelMap& phi);

// Checks sum_j fox_abel(w, j, phi) * (phi(x_j) - 1) == phi(w) - 1.
bool fundamental_identity_check(const Word& w, const AbelMap& phi);

// Endomorphism of a free group given by generator images with supplied
// inverse images; validation checks that fwd and inv compose to the identity.
struct FreeHom {
    std::vector<Word> fwd;
    std::vector<Word> inv;

    int generators() const { return static_cast<int>(fwd.size()); }
    friend bool operator==(const FreeHom& a, const FreeHom& b) = default;
};

FreeHom identity_hom(int generators);
// Images of every generator under f (substitute f.fwd into w).
Word apply_hom(const FreeHom& f, const Word& w);
Word apply_hom_inverse(const FreeHom& f, const Word& w);
FreeHom compose(const FreeHom& f, const FreeHom& g);  // f after g
FreeHom inverse(const FreeHom& f);

// True if fwd/inv compose to the identity on every generator.
bool valid_inverse_pair(const FreeHom& f);

// Product of commutators [alpha_i, beta_i], i = 1..k, for a FreeHom on 2k
// generators.
Word boundary_word(int k);
// valid_inverse_pair plus exact preservation of the boundary word.
bool fixes_boundary(const FreeHom& f);

// Matrix of the map induced on twisted first homology by f, in the bases
// (a_1..a_k, b_1..b_k): column j holds phi_plus of the Fox row of the image
// of generator j, so images sit in columns.
FieldMatrix fox_jacobian(const FreeHom& f, const AbelMap& phi_plus);

// For each handle i: the transvections alpha_i -> alpha_i beta_i and
// beta_i -> beta_i alpha_i (other generators fixed) and their inverses.
// Every element fixes the boundary word exactly.
std::vector<FreeHom> twist_library(int k);

}  // namespace alexr
