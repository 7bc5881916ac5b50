// The cobordism category layer.  Objects are pairs (g, phi); morphisms are
// encoded either as composable words in elementary pieces (lower/upper
// handlebodies and mapping cylinders, each padded by identity handles) or as
// spine presentations with boundary-loop words.  Both encodings evaluate over
// the fraction field to a graded map defined up to +-t^k; the classical knot
// and closed-manifold invariants are read off from the same engine.
//
// Handle bookkeeping follows the Heegaard normal form: a piece acting on k
// handles occupies the first k handles after pad_left identity handles, with
// pad identity handles tensored on the right.

#pragma once

#include "alexr/exterior.hpp"
#include "alexr/freegroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alexr {

// Object (g, phi): the genus and the values of phi on the based loops
// alpha_1..alpha_g, beta_1..beta_g.
struct CobObject {
    int genus = 0;
    int nvars = 0;
    std::vector<ExpVec> phi_alpha;
    std::vector<ExpVec> phi_beta;

    static CobObject trivial(int genus, int nvars);
    void validate() const;
    CobObject slice(int from, int count) const;  // handles [from, from+count)
    // phi as an abelianization on the 2g surface generators.
    AbelMap abel() const;

    friend bool operator==(const CobObject& a, const CobObject& b) = default;
};

CobObject tensor(const CobObject& a, const CobObject& b);

enum class PieceType { LowerAlpha, UpperBeta, LowerBeta, UpperAlpha, Cylinder };

std::string piece_type_name(PieceType t);

struct ElementaryPiece {
    PieceType type = PieceType::Cylinder;
    int k = 0;         // handles the piece acts on
    int pad = 0;       // identity handles tensored on the right
    int pad_left = 0;  // identity handles tensored on the left
    std::optional<FreeHom> twist;  // for Cylinder: a FreeHom on 2k generators

    int source_genus() const;
    int target_genus() const;
};

struct HeegaardWord {
    std::vector<CobObject> objects;  // pieces.size() + 1 entries, bottom first
    std::vector<ElementaryPiece> pieces;

    const CobObject& source() const { return objects.front(); }
    const CobObject& target() const { return objects.back(); }
    void validate() const;  // genus bookkeeping and phi preconditions per piece
};

// Evaluate one elementary piece between the given objects.
GradedMap eval_elementary(const ElementaryPiece& p, const CobObject& src, const CobObject& dst);

// Composition of the piece evaluations, in order; degree = g_+ - g_-.
GradedMap eval_word(const HeegaardWord& w);

// Time-reversal: reverses the sequence, swaps LowerAlpha <-> UpperAlpha and
// UpperBeta <-> LowerBeta, inverts cylinders, preserves pads.
HeegaardWord dual_word(const HeegaardWord& w);

// Tensor product of words via the interchange law; pads the first word on
// the right and the second on the left.
HeegaardWord tensor_words(const HeegaardWord& a, const HeegaardWord& b);

HeegaardWord concat_words(const HeegaardWord& first, const HeegaardWord& then);

// Spine presentation of a cobordism: a free group on g+r generators, r
// relator words, phi on the generators, and the boundary loops of both
// parametrizations written in the generators.
struct PresentedCobordism {
    int nvars = 0;
    int generators = 0;
    int g_minus = 0, g_plus = 0;
    std::vector<Word> relators;
    std::vector<ExpVec> phi;  // one exponent vector per generator
    std::vector<Word> bottom_alpha, bottom_beta;  // images of the bottom loops
    std::vector<Word> top_alpha, top_beta;        // images of the top loops

    AbelMap abel() const { return AbelMap{nvars, phi}; }
    void validate() const;  // deficiency = g_- + g_+, phi kills relators, arities
    CobObject source() const;
    CobObject target() const;
};

// Presentations of the elementary cobordisms, for two-path cross-checks.
PresentedCobordism present_cylinder(const FreeHom& f, const CobObject& target_obj);
PresentedCobordism present_lower_alpha(int k, const CobObject& target_obj);
PresentedCobordism present_upper_beta(int k, const CobObject& source_obj);

// Disjoint-union presentation realizing the boundary-connected sum.
PresentedCobordism tensor_presented(const PresentedCobordism& a, const PresentedCobordism& b);

// det of the (g+r) x (g+r) matrix stacking the Fox rows of the relators over
// the Fox rows of the kappa words, abelianized through phi.  Zero whenever
// the twisted homology is too big or the classes are dependent.
RatFunc reidemeister_function(const PresentedCobordism& p, const std::vector<Word>& kappa);

// Reconstruction of the graded map from reidemeister_function coefficients
// via the volume-form expansion.
GradedMap eval_presented(const PresentedCobordism& p);

// Knot (or knot-in-manifold) input: a deficiency-one presentation with a
// meridian and optional parallel word.
struct KnotInput {
    int nvars = 0;
    int generators = 0;
    std::vector<Word> relators;
    std::vector<ExpVec> phi;
    Word meridian;
    std::optional<Word> parallel;

    AbelMap abel() const { return AbelMap{nvars, phi}; }
    void validate() const;  // deficiency one, phi kills relators
};

// The Alexander polynomial: det of the Fox matrix of (relators, meridian),
// unit-normalized.  Requires a one-variable session with phi(meridian) = t.
LaurentPoly knot_alexander(const KnotInput& k);

// Whether the normalized polynomial evaluates to +-1 at t = 1.
bool alexander_at_one_ok(const LaurentPoly& delta);

// tau of the knot exterior: the parallel-row determinant divided by
// phi(parallel) - 1, which must differ from 1.
RatFunc knot_torsion(const KnotInput& k);

// tau of the closed manifold obtained by filling the knot back in: the
// parallel-row determinant divided by (phi([K]) - 1)^2.
RatFunc closed_torsion(const KnotInput& k);

// Degree-zero values of homology cobordisms factor as tau * Lambda(r).
struct MagnusData {
    RatFunc tau;    // relative torsion of (M, top boundary)
    FieldMatrix r;  // the Magnus matrix, canonical (independent of the unit)
};

// Extracts (tau, r) from a degree-0 graded map and verifies every block
// equals tau * Lambda^j(r); throws if the value does not factor (not a
// homology cobordism) or the scalar block vanishes (torsion zero), reported
// distinctly.
MagnusData magnus_extract(const GradedMap& v);

// True iff every block entry lies in Z[G] after clearing the global unit
// ambiguity (denominators divide numerators exactly in the Laurent ring).
bool integrality_check(const GradedMap& v);

// Unit-normalized representative: the first nonzero entry in block-scan
// order is put in canonical +-G form and the same unit is applied globally.
GradedMap normalize_global(const GradedMap& v);

}  // namespace alexr
