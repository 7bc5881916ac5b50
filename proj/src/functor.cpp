#include "alexr/functor.hpp"

#include <stdexcept>

namespace alexr {

CobObject CobObject::trivial(int genus, int nvars) {
    CobObject o;
    o.genus = genus;
    o.nvars = nvars;
    o.phi_alpha.assign(static_cast<size_t>(genus), exp_zero(nvars));
    o.phi_beta.assign(static_cast<size_t>(genus), exp_zero(nvars));
    return o;
}

void CobObject::validate() const {
    if (genus < 0) throw std::invalid_argument("CobObject: negative genus");
    if (static_cast<int>(phi_alpha.size()) != genus || static_cast<int>(phi_beta.size()) != genus)
        throw std::invalid_argument("CobObject: phi arity mismatch");
    for (const auto& e : phi_alpha)
        if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("CobObject: bad exponent length");
    for (const auto& e : phi_beta)
        if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("CobObject: bad exponent length");
}

CobObject CobObject::slice(int from, int count) const {
    if (from < 0 || count < 0 || from + count > genus)
        throw std::invalid_argument("CobObject::slice: out of range");
    CobObject o;
    o.genus = count;
    o.nvars = nvars;
    o.phi_alpha.assign(phi_alpha.begin() + from, phi_alpha.begin() + from + count);
    o.phi_beta.assign(phi_beta.begin() + from, phi_beta.begin() + from + count);
    return o;
}

AbelMap CobObject::abel() const {
    AbelMap m;
    m.nvars = nvars;
    m.images = phi_alpha;
    m.images.insert(m.images.end(), phi_beta.begin(), phi_beta.end());
    return m;
}

CobObject tensor(const CobObject& a, const CobObject& b) {
    check_same_vars(a.nvars, b.nvars, "tensor objects");
    CobObject o;
    o.genus = a.genus + b.genus;
    o.nvars = a.nvars;
    o.phi_alpha = a.phi_alpha;
    o.phi_alpha.insert(o.phi_alpha.end(), b.phi_alpha.begin(), b.phi_alpha.end());
    o.phi_beta = a.phi_beta;
    o.phi_beta.insert(o.phi_beta.end(), b.phi_beta.begin(), b.phi_beta.end());
    return o;
}

std::string piece_type_name(PieceType t) {
    switch (t) {
        case PieceType::LowerAlpha: return "lower-alpha";
        case PieceType::UpperBeta: return "upper-beta";
        case PieceType::LowerBeta: return "lower-beta";
        case PieceType::UpperAlpha: return "upper-alpha";
        case PieceType::Cylinder: return "cylinder";
    }
    return "?";
}

int ElementaryPiece::source_genus() const {
    switch (type) {
        case PieceType::LowerAlpha:
        case PieceType::LowerBeta: return pad_left + pad;
        case PieceType::UpperBeta:
        case PieceType::UpperAlpha:
        case PieceType::Cylinder: return pad_left + k + pad;
    }
    return 0;
}

int ElementaryPiece::target_genus() const {
    switch (type) {
        case PieceType::LowerAlpha:
        case PieceType::LowerBeta:
        case PieceType::Cylinder: return pad_left + k + pad;
        case PieceType::UpperBeta:
        case PieceType::UpperAlpha: return pad_left + pad;
    }
    return 0;
}

namespace {

bool exp_is_zero(const ExpVec& e) {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

void check_piece(const ElementaryPiece& p, const CobObject& src, const CobObject& dst) {
    src.validate();
    dst.validate();
    check_same_vars(src.nvars, dst.nvars, "piece");
    if (p.k < 0 || p.pad < 0 || p.pad_left < 0)
        throw std::invalid_argument("piece: negative arities");
    if (src.genus != p.source_genus() || dst.genus != p.target_genus())
        throw std::invalid_argument("piece: genus bookkeeping mismatch for " + piece_type_name(p.type));
    if (!(src.slice(0, p.pad_left) == dst.slice(0, p.pad_left)))
        throw std::invalid_argument("piece: left pad objects differ");
    int src_core = p.pad_left + (src.genus - p.pad_left - p.pad);
    int dst_core = p.pad_left + (dst.genus - p.pad_left - p.pad);
    if (!(src.slice(src_core, p.pad) == dst.slice(dst_core, p.pad)))
        throw std::invalid_argument("piece: right pad objects differ");

    auto require_trivial = [&](const std::vector<ExpVec>& phis, const char* what) {
        for (int i = 0; i < p.k; ++i) {
            const ExpVec& e = phis[static_cast<size_t>(p.pad_left + i)];
            if (!exp_is_zero(e))
                throw std::invalid_argument(std::string("piece: ") + piece_type_name(p.type) +
                                            " requires trivial phi on " + what + " handle " +
                                            std::to_string(i + 1) + ", got " +
                                            render(LaurentPoly::monomial(src.nvars, e, 1)));
        }
    };
    switch (p.type) {
        case PieceType::LowerAlpha: require_trivial(dst.phi_alpha, "alpha"); break;
        case PieceType::UpperBeta: require_trivial(src.phi_beta, "beta"); break;
        case PieceType::LowerBeta: require_trivial(dst.phi_beta, "beta"); break;
        case PieceType::UpperAlpha: require_trivial(src.phi_alpha, "alpha"); break;
        case PieceType::Cylinder: {
            if (!p.twist) throw std::invalid_argument("piece: cylinder without a twist");
            const FreeHom& f = *p.twist;
            if (f.generators() != 2 * p.k)
                throw std::invalid_argument("piece: cylinder twist arity mismatch");
            if (!fixes_boundary(f))
                throw std::invalid_argument("piece: cylinder twist must fix the boundary word");
            AbelMap lo = src.slice(p.pad_left, p.k).abel();
            AbelMap hi = dst.slice(p.pad_left, p.k).abel();
            for (int j = 0; j < 2 * p.k; ++j)
                if (!(lo.images[static_cast<size_t>(j)] == hi.eval(f.fwd[static_cast<size_t>(j)])))
                    throw std::invalid_argument(
                        "piece: cylinder abelianizations disagree on generator " + std::to_string(j + 1));
            break;
        }
    }
}

uint32_t low_bits(int k) { return k >= 32 ? ~0u : ((1u << k) - 1); }

GradedMap core_map(const ElementaryPiece& p, const CobObject& src, const CobObject& dst) {
    const int nv = src.nvars;
    const int k = p.k;
    const uint32_t mask_a = low_bits(k);
    const uint32_t mask_b = low_bits(k) << k;
    switch (p.type) {
        case PieceType::LowerAlpha:
        case PieceType::LowerBeta: {
            GradedMap m = GradedMap::zero(0, 2 * k, k, nv);
            uint32_t target = p.type == PieceType::LowerAlpha ? mask_a : mask_b;
            FieldMatrix b = FieldMatrix::zero(static_cast<int>(basis_masks(2 * k, k).size()), 1, nv);
            b.at(basis_index(2 * k, k, target), 0) = RatFunc::one(nv);
            m.set_block(0, std::move(b));
            return m;
        }
        case PieceType::UpperBeta:
        case PieceType::UpperAlpha: {
            GradedMap m = GradedMap::zero(2 * k, 0, -k, nv);
            uint32_t source = p.type == PieceType::UpperBeta ? mask_a : mask_b;
            FieldMatrix b = FieldMatrix::zero(1, static_cast<int>(basis_masks(2 * k, k).size()), nv);
            b.at(0, basis_index(2 * k, k, source)) = RatFunc::one(nv);
            m.set_block(k, std::move(b));
            return m;
        }
        case PieceType::Cylinder: {
            AbelMap phi_plus = dst.slice(p.pad_left, k).abel();
            return lambda_extend(fox_jacobian(*p.twist, phi_plus));
        }
    }
    throw std::logic_error("core_map: unreachable");
}

}  // namespace

GradedMap eval_elementary(const ElementaryPiece& p, const CobObject& src, const CobObject& dst) {
    check_piece(p, src, dst);
    GradedMap m = core_map(p, src, dst);
    if (p.pad > 0) {
        const CobObject right = src.slice(src.genus - p.pad, p.pad);
        m = tensor_koszul(m, GradedMap::identity(2 * right.genus, src.nvars));
    }
    if (p.pad_left > 0) {
        const CobObject left = src.slice(0, p.pad_left);
        m = tensor_koszul(GradedMap::identity(2 * left.genus, src.nvars), m);
    }
    return m;
}

void HeegaardWord::validate() const {
    if (objects.size() != pieces.size() + 1)
        throw std::invalid_argument("HeegaardWord: need pieces+1 objects");
    for (const auto& o : objects) o.validate();
    for (size_t i = 0; i < pieces.size(); ++i)
        check_piece(pieces[i], objects[i], objects[i + 1]);
}

GradedMap eval_word(const HeegaardWord& w) {
    w.validate();
    GradedMap acc = GradedMap::identity(2 * w.source().genus, w.source().nvars);
    for (size_t i = 0; i < w.pieces.size(); ++i)
        acc = compose(eval_elementary(w.pieces[i], w.objects[i], w.objects[i + 1]), acc);
    return acc;
}

HeegaardWord dual_word(const HeegaardWord& w) {
    HeegaardWord d;
    d.objects.assign(w.objects.rbegin(), w.objects.rend());
    for (auto it = w.pieces.rbegin(); it != w.pieces.rend(); ++it) {
        ElementaryPiece p = *it;
        switch (p.type) {
            case PieceType::LowerAlpha: p.type = PieceType::UpperAlpha; break;
            case PieceType::UpperAlpha: p.type = PieceType::LowerAlpha; break;
            case PieceType::UpperBeta: p.type = PieceType::LowerBeta; break;
            case PieceType::LowerBeta: p.type = PieceType::UpperBeta; break;
            case PieceType::Cylinder: p.twist = inverse(*p.twist); break;
        }
        d.pieces.push_back(std::move(p));
    }
    return d;
}

HeegaardWord tensor_words(const HeegaardWord& a, const HeegaardWord& b) {
    a.validate();
    b.validate();
    const int ga_minus = a.source().genus;
    const CobObject& b_top = b.target();
    HeegaardWord t;
    // Id_{a source} tensor b, then a tensor Id_{b target}.
    for (size_t i = 0; i < b.objects.size(); ++i) t.objects.push_back(tensor(a.source(), b.objects[i]));
    for (const auto& piece : b.pieces) {
        ElementaryPiece p = piece;
        p.pad_left += ga_minus;
        t.pieces.push_back(std::move(p));
    }
    for (size_t i = 1; i < a.objects.size(); ++i) t.objects.push_back(tensor(a.objects[i], b_top));
    for (const auto& piece : a.pieces) {
        ElementaryPiece p = piece;
        p.pad += b_top.genus;
        t.pieces.push_back(std::move(p));
    }
    return t;
}

HeegaardWord concat_words(const HeegaardWord& first, const HeegaardWord& then) {
    if (!(first.target() == then.source()))
        throw std::invalid_argument("concat_words: objects do not match");
    HeegaardWord w = first;
    w.objects.insert(w.objects.end(), then.objects.begin() + 1, then.objects.end());
    w.pieces.insert(w.pieces.end(), then.pieces.begin(), then.pieces.end());
    return w;
}

void PresentedCobordism::validate() const {
    if (generators < 0 || g_minus < 0 || g_plus < 0)
        throw std::invalid_argument("PresentedCobordism: negative arities");
    if (generators - static_cast<int>(relators.size()) != g_minus + g_plus)
        throw std::invalid_argument("PresentedCobordism: deficiency must equal g_- + g_+");
    if (static_cast<int>(phi.size()) != generators)
        throw std::invalid_argument("PresentedCobordism: phi arity mismatch");
    for (const auto& e : phi)
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("PresentedCobordism: bad exponent length");
    AbelMap a = abel();
    for (const auto& rho : relators)
        if (!exp_is_zero(a.eval(rho)))
            throw std::invalid_argument("PresentedCobordism: phi does not kill a relator");
    if (static_cast<int>(bottom_alpha.size()) != g_minus ||
        static_cast<int>(bottom_beta.size()) != g_minus ||
        static_cast<int>(top_alpha.size()) != g_plus ||
        static_cast<int>(top_beta.size()) != g_plus)
        throw std::invalid_argument("PresentedCobordism: boundary word arity mismatch");
}

CobObject PresentedCobordism::source() const {
    AbelMap a = abel();
    CobObject o;
    o.genus = g_minus;
    o.nvars = nvars;
    for (const auto& w : bottom_alpha) o.phi_alpha.push_back(a.eval(w));
    for (const auto& w : bottom_beta) o.phi_beta.push_back(a.eval(w));
    return o;
}

CobObject PresentedCobordism::target() const {
    AbelMap a = abel();
    CobObject o;
    o.genus = g_plus;
    o.nvars = nvars;
    for (const auto& w : top_alpha) o.phi_alpha.push_back(a.eval(w));
    for (const auto& w : top_beta) o.phi_beta.push_back(a.eval(w));
    return o;
}

PresentedCobordism present_cylinder(const FreeHom& f, const CobObject& target_obj) {
    target_obj.validate();
    const int k = target_obj.genus;
    if (f.generators() != 2 * k) throw std::invalid_argument("present_cylinder: arity mismatch");
    PresentedCobordism p;
    p.nvars = target_obj.nvars;
    p.generators = 2 * k;
    p.g_minus = p.g_plus = k;
    p.phi = target_obj.abel().images;
    for (int i = 1; i <= k; ++i) {
        p.bottom_alpha.push_back(f.fwd[static_cast<size_t>(i) - 1]);
        p.bottom_beta.push_back(f.fwd[static_cast<size_t>(k + i) - 1]);
        p.top_alpha.push_back(Word::generator(i));
        p.top_beta.push_back(Word::generator(k + i));
    }
    p.validate();
    return p;
}

PresentedCobordism present_lower_alpha(int k, const CobObject& target_obj) {
    target_obj.validate();
    if (target_obj.genus != k) throw std::invalid_argument("present_lower_alpha: genus mismatch");
    for (const auto& e : target_obj.phi_alpha)
        if (!exp_is_zero(e))
            throw std::invalid_argument("present_lower_alpha: alpha curves must have trivial phi");
    PresentedCobordism p;
    p.nvars = target_obj.nvars;
    p.generators = k;  // the handle cores
    p.g_minus = 0;
    p.g_plus = k;
    p.phi = target_obj.phi_beta;
    for (int i = 1; i <= k; ++i) {
        p.top_alpha.push_back(Word());  // alpha_i bounds a disk
        p.top_beta.push_back(Word::generator(i));
    }
    p.validate();
    return p;
}

PresentedCobordism present_upper_beta(int k, const CobObject& source_obj) {
    source_obj.validate();
    if (source_obj.genus != k) throw std::invalid_argument("present_upper_beta: genus mismatch");
    for (const auto& e : source_obj.phi_beta)
        if (!exp_is_zero(e))
            throw std::invalid_argument("present_upper_beta: beta curves must have trivial phi");
    PresentedCobordism p;
    p.nvars = source_obj.nvars;
    p.generators = k;  // pushed-in alpha curves
    p.g_minus = k;
    p.g_plus = 0;
    p.phi = source_obj.phi_alpha;
    for (int i = 1; i <= k; ++i) {
        p.bottom_alpha.push_back(Word::generator(i));
        p.bottom_beta.push_back(Word());  // beta_i bounds a disk
    }
    p.validate();
    return p;
}

namespace {

Word shift_word(const Word& w, int by) {
    std::vector<int> ls;
    for (int x : w.letters()) ls.push_back(x > 0 ? x + by : x - by);
    return Word(std::move(ls));
}

}  // namespace

PresentedCobordism tensor_presented(const PresentedCobordism& a, const PresentedCobordism& b) {
    a.validate();
    b.validate();
    check_same_vars(a.nvars, b.nvars, "tensor_presented");
    PresentedCobordism t;
    t.nvars = a.nvars;
    t.generators = a.generators + b.generators;
    t.g_minus = a.g_minus + b.g_minus;
    t.g_plus = a.g_plus + b.g_plus;
    t.phi = a.phi;
    t.phi.insert(t.phi.end(), b.phi.begin(), b.phi.end());
    t.relators = a.relators;
    for (const auto& r : b.relators) t.relators.push_back(shift_word(r, a.generators));
    auto splice = [&](const std::vector<Word>& wa, const std::vector<Word>& wb) {
        std::vector<Word> out = wa;
        for (const auto& w : wb) out.push_back(shift_word(w, a.generators));
        return out;
    };
    t.bottom_alpha = splice(a.bottom_alpha, b.bottom_alpha);
    t.bottom_beta = splice(a.bottom_beta, b.bottom_beta);
    t.top_alpha = splice(a.top_alpha, b.top_alpha);
    t.top_beta = splice(a.top_beta, b.top_beta);
    t.validate();
    return t;
}

RatFunc reidemeister_function(const PresentedCobordism& p, const std::vector<Word>& kappa) {
    p.validate();
    const int g = p.g_minus + p.g_plus;
    if (static_cast<int>(kappa.size()) != g)
        throw std::invalid_argument("reidemeister_function: expected " + std::to_string(g) + " loops");
    const int n = p.generators;
    const AbelMap a = p.abel();
    PolyMatrix m = PolyMatrix::zero(n, n, p.nvars);
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = fox_abel(p.relators[i], j + 1, a);
    for (size_t i = 0; i < kappa.size(); ++i)
        for (int j = 0; j < n; ++j)
            m.at(static_cast<int>(p.relators.size() + i), j) = fox_abel(kappa[i], j + 1, a);
    return RatFunc::from_poly(det_fraction_free(m));
}

GradedMap eval_presented(const PresentedCobordism& p) {
    p.validate();
    const int g = p.g_minus + p.g_plus;
    const int src_dim = 2 * p.g_minus, dst_dim = 2 * p.g_plus;
    const int degree = p.g_plus - p.g_minus;
    GradedMap out = GradedMap::zero(src_dim, dst_dim, degree, p.nvars);

    auto bottom_word = [&](int i) {
        return i < p.g_minus ? p.bottom_alpha[static_cast<size_t>(i)]
                             : p.bottom_beta[static_cast<size_t>(i - p.g_minus)];
    };
    auto top_word = [&](int i) {
        return i < p.g_plus ? p.top_alpha[static_cast<size_t>(i)]
                            : p.top_beta[static_cast<size_t>(i - p.g_plus)];
    };

    for (int j = out.j_min(); j <= out.j_max(); ++j) {
        const auto& src_basis = basis_masks(src_dim, j);
        const auto& dst_basis = basis_masks(dst_dim, j + degree);
        const auto& pmasks = basis_masks(dst_dim, g - j);
        FieldMatrix block = FieldMatrix::zero(static_cast<int>(dst_basis.size()),
                                              static_cast<int>(src_basis.size()), p.nvars);
        for (size_t col = 0; col < src_basis.size(); ++col) {
            std::vector<Word> kappa;
            for (int i = 0; i < src_dim; ++i)
                if (src_basis[col] & (1u << i)) kappa.push_back(bottom_word(i));
            for (uint32_t pm : pmasks) {
                std::vector<Word> full = kappa;
                for (int i = 0; i < dst_dim; ++i)
                    if (pm & (1u << i)) full.push_back(top_word(i));
                RatFunc coeff = reidemeister_function(p, full);
                if (coeff.is_zero()) continue;
                int sign = shuffle_sign(pm, dst_dim);
                if (popcount(pm) % 2 != 0) sign = -sign;
                uint32_t complement = low_bits(dst_dim) & ~pm;
                int row = basis_index(dst_dim, j + degree, complement);
                block.at(row, static_cast<int>(col)) += sign > 0 ? coeff : -coeff;
            }
        }
        out.set_block(j, std::move(block));
    }
    out.prune();
    return out;
}

void KnotInput::validate() const {
    if (generators - static_cast<int>(relators.size()) != 1)
        throw std::invalid_argument("KnotInput: presentation must have deficiency one");
    if (static_cast<int>(phi.size()) != generators)
        throw std::invalid_argument("KnotInput: phi arity mismatch");
    AbelMap a = abel();
    for (const auto& rho : relators)
        if (!exp_is_zero(a.eval(rho)))
            throw std::invalid_argument("KnotInput: phi does not kill a relator");
}

namespace {

// Exterior of the knot as a morphism 1 -> 0 with the meridian as bottom
// alpha; the bottom beta slot holds the parallel when present and the
// meridian otherwise (the beta word only matters for full functor read-outs).
PresentedCobordism knot_presentation(const KnotInput& k) {
    PresentedCobordism p;
    p.nvars = k.nvars;
    p.generators = k.generators;
    p.g_minus = 1;
    p.g_plus = 0;
    p.relators = k.relators;
    p.phi = k.phi;
    p.bottom_alpha = {k.meridian};
    p.bottom_beta = {k.parallel ? *k.parallel : k.meridian};
    p.validate();
    return p;
}

RatFunc row_determinant(const KnotInput& k, const Word& last_row) {
    PresentedCobordism p = knot_presentation(k);
    return reidemeister_function(p, {last_row});
}

}  // namespace

LaurentPoly knot_alexander(const KnotInput& k) {
    k.validate();
    if (k.nvars != 1) throw std::invalid_argument("knot_alexander: one-variable sessions only");
    if (!(k.abel().eval(k.meridian) == ExpVec{1}))
        throw std::invalid_argument("knot_alexander: phi(meridian) must be t");
    RatFunc d = row_determinant(k, k.meridian);
    auto poly = d.as_poly();
    if (!poly) throw std::logic_error("knot_alexander: non-polynomial determinant");
    return normalize_unit(*poly).first;
}

bool alexander_at_one_ok(const LaurentPoly& delta) {
    BigInt v = delta.eval_at_one();
    return v == 1 || v == -1;
}

RatFunc knot_torsion(const KnotInput& k) {
    k.validate();
    if (!k.parallel) throw std::invalid_argument("knot_torsion: parallel word required");
    AbelMap a = k.abel();
    ExpVec lam = a.eval(*k.parallel);
    if (exp_is_zero(lam)) throw std::invalid_argument("knot_torsion: phi(parallel) must differ from 1");
    RatFunc num = row_determinant(k, *k.parallel);
    RatFunc den = RatFunc::from_poly(LaurentPoly::monomial(k.nvars, lam, 1) -
                                     LaurentPoly::constant(k.nvars, 1));
    return num / den;
}

RatFunc closed_torsion(const KnotInput& k) {
    k.validate();
    if (!k.parallel) throw std::invalid_argument("closed_torsion: parallel word required");
    AbelMap a = k.abel();
    ExpVec kk = a.eval(*k.parallel);
    if (exp_is_zero(kk)) throw std::invalid_argument("closed_torsion: phi([K]) must differ from 1");
    RatFunc num = row_determinant(k, *k.parallel);
    RatFunc den = RatFunc::from_poly(LaurentPoly::monomial(k.nvars, kk, 1) -
                                     LaurentPoly::constant(k.nvars, 1));
    return num / (den * den);
}

MagnusData magnus_extract(const GradedMap& v) {
    if (v.degree != 0) throw std::invalid_argument("magnus_extract: degree-0 maps only");
    if (v.src_dim != v.dst_dim) throw std::invalid_argument("magnus_extract: endomorphisms only");
    FieldMatrix scalar = v.block_or_zero(0);
    if (scalar.rows != 1 || scalar.cols != 1) throw std::logic_error("magnus_extract: bad scalar block");
    if (scalar.at(0, 0).is_zero()) {
        if (v.is_zero())
            throw std::invalid_argument("magnus_extract: value is zero (torsion vanishes)");
        throw std::invalid_argument(
            "magnus_extract: scalar block vanishes but higher blocks do not (not a homology cobordism)");
    }
    MagnusData out;
    out.tau = scalar.at(0, 0);
    RatFunc inv_tau = RatFunc::one(v.nvars) / out.tau;
    out.r = scalar_mul(inv_tau, v.block_or_zero(1));
    GradedMap expected = scalar_mul(out.tau, lambda_extend(out.r));
    if (!(expected == v))
        throw std::invalid_argument(
            "magnus_extract: blocks do not factor as tau * Lambda(r) (not a homology cobordism value)");
    return out;
}

bool integrality_check(const GradedMap& v) {
    for (const auto& [j, b] : v.blocks)
        for (const auto& e : b.entries)
            if (!e.as_poly()) return false;
    return true;
}

GradedMap normalize_global(const GradedMap& v) {
    for (int j = v.j_min(); j <= v.j_max(); ++j) {
        const FieldMatrix* b = v.block(j);
        if (!b) continue;
        for (const auto& e : b->entries) {
            if (e.is_zero()) continue;
            auto [e0, u] = normalize_unit(e);
            return scalar_mul(unit_apply(u.inverse(), RatFunc::one(v.nvars)), v);
        }
    }
    return v;
}

}  // namespace alexr
