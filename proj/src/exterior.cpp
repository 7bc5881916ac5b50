#include "alexr/exterior.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace alexr {

int popcount(uint32_t mask) { return std::popcount(mask); }

namespace {

struct BasisCache {
    std::vector<uint32_t> masks;
    std::map<uint32_t, int> index;
};

const BasisCache& basis_cache(int dim, int j) {
    static std::map<std::pair<int, int>, BasisCache> cache;
    auto key = std::make_pair(dim, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    BasisCache bc;
    if (j >= 0 && j <= dim) {
        // Enumerate j-subsets in lexicographic order of the index tuple.
        std::vector<int> idx(static_cast<size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            uint32_t mask = 0;
            for (int v : idx) mask |= (1u << v);
            bc.index[mask] = static_cast<int>(bc.masks.size());
            bc.masks.push_back(mask);
            if (j == 0) break;
            int p = j - 1;
            while (p >= 0 && idx[static_cast<size_t>(p)] == dim - j + p) --p;
            if (p < 0) break;
            ++idx[static_cast<size_t>(p)];
            for (int q = p + 1; q < j; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
        }
    }
    return cache.emplace(key, std::move(bc)).first->second;
}

}  // namespace

const std::vector<uint32_t>& basis_masks(int dim, int j) { return basis_cache(dim, j).masks; }

int basis_index(int dim, int j, uint32_t mask) {
    const auto& bc = basis_cache(dim, j);
    auto it = bc.index.find(mask);
    if (it == bc.index.end()) throw std::invalid_argument("basis_index: mask not in basis");
    return it->second;
}

int merge_sign(uint32_t s, uint32_t t) {
    if (s & t) return 0;
    int inversions = 0;
    for (uint32_t tt = t; tt; tt &= tt - 1) {
        int bit = std::countr_zero(tt);
        // members of s above this member of t must jump over it
        inversions += std::popcount(s >> (bit + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int shuffle_sign(uint32_t mask, int dim) {
    uint32_t full = dim >= 32 ? ~0u : ((1u << dim) - 1);
    return merge_sign(mask, full & ~mask);
}

Multivector Multivector::basis_element(int dim, int nvars, uint32_t mask) {
    Multivector m(dim, nvars);
    m.add_term(mask, RatFunc::one(nvars));
    return m;
}

Multivector Multivector::scalar(int dim, int nvars, const RatFunc& c) {
    Multivector m(dim, nvars);
    m.add_term(0, c);
    return m;
}

void Multivector::add_term(uint32_t mask, const RatFunc& c) {
    if (popcount(mask) > dim_) throw std::invalid_argument("Multivector: mask exceeds dimension");
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Multivector::homogeneous_of_degree(int j) const {
    for (const auto& [mask, c] : terms_)
        if (popcount(mask) != j) return false;
    return true;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("Multivector+: dimension mismatch");
    Multivector r = a;
    for (const auto& [mask, c] : b.terms_) r.add_term(mask, c);
    return r;
}

Multivector operator*(const RatFunc& c, const Multivector& m) {
    Multivector r(m.dim_, m.nvars_);
    for (const auto& [mask, x] : m.terms_) r.add_term(mask, c * x);
    return r;
}

bool operator==(const Multivector& a, const Multivector& b) {
    if (a.dim_ != b.dim_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ita = a.terms_.begin(), itb = b.terms_.begin(); ita != a.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!(ita->second == itb->second)) return false;
    }
    return true;
}

Multivector wedge(const Multivector& x, const Multivector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    Multivector r(x.dim(), x.nvars());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            int s = merge_sign(mx, my);
            if (s == 0) continue;
            RatFunc c = cx * cy;
            r.add_term(mx | my, s > 0 ? c : -c);
        }
    return r;
}

RatFunc volume_pair(const Multivector& x, const Multivector& y) {
    Multivector w = wedge(x, y);
    uint32_t full = x.dim() >= 32 ? ~0u : ((1u << x.dim()) - 1);
    auto it = w.terms().find(full);
    if (it == w.terms().end()) return RatFunc::zero(x.nvars());
    return it->second;
}

GradedMap GradedMap::zero(int src_dim, int dst_dim, int degree, int nvars) {
    return GradedMap{src_dim, dst_dim, degree, nvars, {}};
}

GradedMap GradedMap::identity(int dim, int nvars) {
    GradedMap m{dim, dim, 0, nvars, {}};
    for (int j = 0; j <= dim; ++j) {
        int n = static_cast<int>(basis_masks(dim, j).size());
        m.blocks.emplace(j, FieldMatrix::identity(n, nvars));
    }
    return m;
}

int GradedMap::j_min() const { return std::max(0, -degree); }
int GradedMap::j_max() const { return std::min(src_dim, dst_dim - degree); }

const FieldMatrix* GradedMap::block(int j) const {
    auto it = blocks.find(j);
    return it == blocks.end() ? nullptr : &it->second;
}

FieldMatrix GradedMap::block_or_zero(int j) const {
    if (const FieldMatrix* b = block(j)) return *b;
    int rows = (j + degree < 0 || j + degree > dst_dim)
                   ? 0
                   : static_cast<int>(basis_masks(dst_dim, j + degree).size());
    int cols = (j < 0 || j > src_dim) ? 0 : static_cast<int>(basis_masks(src_dim, j).size());
    return FieldMatrix::zero(rows, cols, nvars);
}

void GradedMap::set_block(int j, FieldMatrix m) {
    if (j < j_min() || j > j_max())
        throw std::invalid_argument("GradedMap::set_block: degree-violating block");
    blocks[j] = std::move(m);
}

void GradedMap::prune() {
    for (auto it = blocks.begin(); it != blocks.end();) {
        bool zero = true;
        for (const auto& e : it->second.entries)
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        it = zero ? blocks.erase(it) : std::next(it);
    }
}

bool GradedMap::is_zero() const {
    for (const auto& [j, b] : blocks)
        for (const auto& e : b.entries)
            if (!e.is_zero()) return false;
    return true;
}

Multivector GradedMap::apply(const Multivector& x) const {
    if (x.dim() != src_dim) throw std::invalid_argument("GradedMap::apply: dimension mismatch");
    Multivector out(dst_dim, nvars);
    for (const auto& [mask, c] : x.terms()) {
        int j = popcount(mask);
        const FieldMatrix* b = block(j);
        if (!b) continue;
        int col = basis_index(src_dim, j, mask);
        const auto& dst_basis = basis_masks(dst_dim, j + degree);
        for (int r = 0; r < b->rows; ++r) {
            const RatFunc& e = b->at(r, col);
            if (!e.is_zero()) out.add_term(dst_basis[static_cast<size_t>(r)], c * e);
        }
    }
    return out;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    if (a.src_dim != b.src_dim || a.dst_dim != b.dst_dim || a.degree != b.degree) return false;
    for (int j = a.j_min(); j <= a.j_max(); ++j)
        if (!(a.block_or_zero(j) == b.block_or_zero(j))) return false;
    return true;
}

GradedMap compose(const GradedMap& after, const GradedMap& first) {
    if (first.dst_dim != after.src_dim) throw std::invalid_argument("compose: object mismatch");
    check_same_vars(first.nvars, after.nvars, "compose");
    GradedMap out = GradedMap::zero(first.src_dim, after.dst_dim, first.degree + after.degree,
                                    first.nvars);
    for (const auto& [j, fb] : first.blocks) {
        const FieldMatrix* ab = after.block(j + first.degree);
        if (!ab) continue;
        if (j < out.j_min() || j > out.j_max()) continue;
        out.set_block(j, *ab * fb);
    }
    out.prune();
    return out;
}

GradedMap scalar_mul(const RatFunc& c, const GradedMap& m) {
    GradedMap out = m;
    for (auto& [j, b] : out.blocks) b = scalar_mul(c, b);
    out.prune();
    return out;
}

GradedMap lambda_extend(const FieldMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("lambda_extend: square matrices only");
    const int d = m.rows;
    GradedMap out = GradedMap::zero(d, d, 0, m.nvars);
    for (int j = 0; j <= d; ++j) {
        const auto& src = basis_masks(d, j);
        const auto& dst = basis_masks(d, j);
        FieldMatrix b = FieldMatrix::zero(static_cast<int>(dst.size()),
                                          static_cast<int>(src.size()), m.nvars);
        for (size_t cj = 0; cj < src.size(); ++cj) {
            std::vector<int> cols;
            for (int i = 0; i < d; ++i)
                if (src[cj] & (1u << i)) cols.push_back(i);
            for (size_t ri = 0; ri < dst.size(); ++ri) {
                std::vector<int> rows;
                for (int i = 0; i < d; ++i)
                    if (dst[ri] & (1u << i)) rows.push_back(i);
                b.at(static_cast<int>(ri), static_cast<int>(cj)) = det(submatrix(m, rows, cols));
            }
        }
        out.set_block(j, std::move(b));
    }
    out.prune();
    return out;
}

namespace {

// Map a basis index of one tensor factor into the concatenated basis.
// Factor objects have genus g1, g2; the first factor's a_i keeps index i and
// its b_i moves past the second factor's a-block.
int embed_index(int i, int g1, int g2, bool second_factor) {
    if (!second_factor) return i < g1 ? i : g2 + i;  // b_j lands past both a-blocks
    return i < g2 ? g1 + i : 2 * g1 + i;
}

// Embedded mask plus the merge sign of reordering the concatenated basis
// elements into increasing order.
std::pair<uint32_t, int> embed_pair(uint32_t m1, uint32_t m2, int g1, int g2) {
    uint32_t e1 = 0, e2 = 0;
    for (uint32_t m = m1; m; m &= m - 1)
        e1 |= 1u << embed_index(std::countr_zero(m), g1, g2, false);
    for (uint32_t m = m2; m; m &= m - 1)
        e2 |= 1u << embed_index(std::countr_zero(m), g1, g2, true);
    return {e1 | e2, merge_sign(e1, e2)};
}

}  // namespace

GradedMap tensor_koszul(const GradedMap& a, const GradedMap& b) {
    check_same_vars(a.nvars, b.nvars, "tensor_koszul");
    if (a.src_dim % 2 || a.dst_dim % 2 || b.src_dim % 2 || b.dst_dim % 2)
        throw std::invalid_argument("tensor_koszul: object dimensions must be even");
    const int gs1 = a.src_dim / 2, gs2 = b.src_dim / 2;
    const int gd1 = a.dst_dim / 2, gd2 = b.dst_dim / 2;
    GradedMap out = GradedMap::zero(a.src_dim + b.src_dim, a.dst_dim + b.dst_dim,
                                    a.degree + b.degree, a.nvars);

    for (const auto& [ja, ba] : a.blocks) {
        for (const auto& [jb, bb] : b.blocks) {
            int j = ja + jb;
            if (j < out.j_min() || j > out.j_max()) continue;
            auto it = out.blocks.find(j);
            if (it == out.blocks.end()) {
                int rows = static_cast<int>(basis_masks(out.dst_dim, j + out.degree).size());
                int cols = static_cast<int>(basis_masks(out.src_dim, j).size());
                it = out.blocks.emplace(j, FieldMatrix::zero(rows, cols, out.nvars)).first;
            }
            FieldMatrix& target = it->second;

            const auto& src_a = basis_masks(a.src_dim, ja);
            const auto& src_b = basis_masks(b.src_dim, jb);
            const auto& dst_a = basis_masks(a.dst_dim, ja + a.degree);
            const auto& dst_b = basis_masks(b.dst_dim, jb + b.degree);
            const int koszul = (b.degree % 2 != 0 && ja % 2 != 0) ? -1 : 1;

            for (size_t ca = 0; ca < src_a.size(); ++ca) {
                for (size_t cb = 0; cb < src_b.size(); ++cb) {
                    auto [src_mask, src_sign] = embed_pair(src_a[ca], src_b[cb], gs1, gs2);
                    int col = basis_index(out.src_dim, j, src_mask);
                    for (int ra = 0; ra < ba.rows; ++ra) {
                        const RatFunc& ea = ba.at(ra, static_cast<int>(ca));
                        if (ea.is_zero()) continue;
                        for (int rb = 0; rb < bb.rows; ++rb) {
                            const RatFunc& eb = bb.at(rb, static_cast<int>(cb));
                            if (eb.is_zero()) continue;
                            auto [dst_mask, dst_sign] =
                                embed_pair(dst_a[static_cast<size_t>(ra)],
                                           dst_b[static_cast<size_t>(rb)], gd1, gd2);
                            int row = basis_index(out.dst_dim, j + out.degree, dst_mask);
                            int s = src_sign * dst_sign * koszul;
                            RatFunc v = ea * eb;
                            target.at(row, col) += s > 0 ? v : -v;
                        }
                    }
                }
            }
        }
    }
    out.prune();
    return out;
}

bool proj_eq(const GradedMap& p, const GradedMap& q) {
    if (p.src_dim != q.src_dim || p.dst_dim != q.dst_dim || p.degree != q.degree) return false;

    // Locate the first position where either map is nonzero.
    for (int j = p.j_min(); j <= p.j_max(); ++j) {
        FieldMatrix bp = p.block_or_zero(j);
        FieldMatrix bq = q.block_or_zero(j);
        for (size_t i = 0; i < bp.entries.size(); ++i) {
            bool zp = bp.entries[i].is_zero(), zq = bq.entries[i].is_zero();
            if (zp && zq) continue;
            if (zp != zq) return false;
            auto u = unit_quotient(bp.entries[i], bq.entries[i]);
            if (!u) return false;
            return p == scalar_mul(unit_apply(*u, RatFunc::one(p.nvars)), q);
        }
    }
    return true;  // both zero
}

std::string mask_label(uint32_t mask, int genus) {
    if (mask == 0) return "1";
    std::string s;
    for (int i = 0; i < 2 * genus; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!s.empty()) s += "^";
        s += (i < genus) ? "a" + std::to_string(i + 1) : "b" + std::to_string(i - genus + 1);
    }
    return s;
}

}  // namespace alexr
