#include "alexr/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace alexr {

namespace {

ExpVec parse_expvec(const Json& j, int vars) {
    if (!j.is_array() || static_cast<int>(j.size()) != vars)
        throw std::invalid_argument("expected an exponent vector of length " + std::to_string(vars));
    ExpVec e;
    for (const auto& x : j) e.push_back(x.get<int>());
    return e;
}

std::vector<ExpVec> parse_expvecs(const Json& j, int vars) {
    std::vector<ExpVec> out;
    for (const auto& x : j) out.push_back(parse_expvec(x, vars));
    return out;
}

Json expvec_json(const ExpVec& e) {
    Json j = Json::array();
    for (int x : e) j.push_back(x);
    return j;
}

Json expvecs_json(const std::vector<ExpVec>& es) {
    Json j = Json::array();
    for (const auto& e : es) j.push_back(expvec_json(e));
    return j;
}

CobObject parse_object(const Json& j, int vars) {
    CobObject o;
    o.genus = j.at("genus").get<int>();
    o.nvars = vars;
    o.phi_alpha = parse_expvecs(j.at("phi_alpha"), vars);
    o.phi_beta = parse_expvecs(j.at("phi_beta"), vars);
    o.validate();
    return o;
}

Json object_json(const CobObject& o) {
    return Json{{"genus", o.genus},
                {"phi_alpha", expvecs_json(o.phi_alpha)},
                {"phi_beta", expvecs_json(o.phi_beta)}};
}

PieceType parse_piece_type(const std::string& s) {
    if (s == "lower-alpha") return PieceType::LowerAlpha;
    if (s == "upper-beta") return PieceType::UpperBeta;
    if (s == "lower-beta") return PieceType::LowerBeta;
    if (s == "upper-alpha") return PieceType::UpperAlpha;
    if (s == "cylinder") return PieceType::Cylinder;
    throw std::invalid_argument("unknown piece type '" + s + "'");
}

std::vector<Word> parse_words(const Json& j, const std::vector<std::string>& names) {
    std::vector<Word> out;
    for (const auto& s : j) out.push_back(parse_word(s.get<std::string>(), names));
    return out;
}

Json words_json(const std::vector<Word>& ws, const std::vector<std::string>& names) {
    Json j = Json::array();
    for (const auto& w : ws) j.push_back(render_word(w, names));
    return j;
}

HeegaardWord parse_heegaard(const Json& j, int vars) {
    HeegaardWord w;
    for (const auto& o : j.at("objects")) w.objects.push_back(parse_object(o, vars));
    for (const auto& pj : j.at("pieces")) {
        ElementaryPiece p;
        p.type = parse_piece_type(pj.at("type").get<std::string>());
        p.k = pj.at("k").get<int>();
        p.pad = pj.value("pad", 0);
        p.pad_left = pj.value("pad_left", 0);
        if (p.type == PieceType::Cylinder) {
            auto names = surface_names(p.k);
            FreeHom f;
            f.fwd = parse_words(pj.at("fwd"), names);
            f.inv = parse_words(pj.at("inv"), names);
            p.twist = std::move(f);
        }
        w.pieces.push_back(std::move(p));
    }
    w.validate();
    return w;
}

PresentedCobordism parse_presented(const Json& j, int vars) {
    PresentedCobordism p;
    p.nvars = vars;
    p.generators = j.at("generators").get<int>();
    p.g_minus = j.at("g_minus").get<int>();
    p.g_plus = j.at("g_plus").get<int>();
    auto names = x_names(p.generators);
    p.relators = parse_words(j.at("relators"), names);
    p.phi = parse_expvecs(j.at("phi"), vars);
    p.bottom_alpha = parse_words(j.at("bottom_alpha"), names);
    p.bottom_beta = parse_words(j.at("bottom_beta"), names);
    p.top_alpha = parse_words(j.at("top_alpha"), names);
    p.top_beta = parse_words(j.at("top_beta"), names);
    p.validate();
    return p;
}

KnotInput parse_knot(const Json& j, int vars) {
    KnotInput k;
    k.nvars = vars;
    k.generators = j.at("generators").get<int>();
    auto names = x_names(k.generators);
    k.relators = parse_words(j.at("relators"), names);
    k.phi = parse_expvecs(j.at("phi"), vars);
    k.meridian = parse_word(j.at("meridian").get<std::string>(), names);
    if (j.contains("parallel")) k.parallel = parse_word(j.at("parallel").get<std::string>(), names);
    k.validate();
    return k;
}

}  // namespace

InputDocument parse_document(const Json& j) {
    InputDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.vars = j.at("vars").get<int>();
    if (doc.vars < 0) throw std::invalid_argument("vars must be >= 0");
    if (doc.kind == "heegaard-word")
        doc.payload = parse_heegaard(j, doc.vars);
    else if (doc.kind == "presented-cobordism")
        doc.payload = parse_presented(j, doc.vars);
    else if (doc.kind == "knot" || doc.kind == "closed-manifold")
        doc.payload = parse_knot(j, doc.vars);
    else
        throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
    return doc;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j = Json::parse(in);
    return parse_document(j);
}

Json to_json(const HeegaardWord& w) {
    Json j;
    j["kind"] = "heegaard-word";
    j["vars"] = w.source().nvars;
    Json objs = Json::array();
    for (const auto& o : w.objects) objs.push_back(object_json(o));
    j["objects"] = std::move(objs);
    Json pieces = Json::array();
    for (const auto& p : w.pieces) {
        Json pj{{"type", piece_type_name(p.type)}, {"k", p.k}, {"pad", p.pad}, {"pad_left", p.pad_left}};
        if (p.twist) {
            auto names = surface_names(p.k);
            pj["fwd"] = words_json(p.twist->fwd, names);
            pj["inv"] = words_json(p.twist->inv, names);
        }
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

Json to_json(const PresentedCobordism& p) {
    auto names = x_names(p.generators);
    return Json{{"kind", "presented-cobordism"},
                {"vars", p.nvars},
                {"generators", p.generators},
                {"g_minus", p.g_minus},
                {"g_plus", p.g_plus},
                {"relators", words_json(p.relators, names)},
                {"phi", expvecs_json(p.phi)},
                {"bottom_alpha", words_json(p.bottom_alpha, names)},
                {"bottom_beta", words_json(p.bottom_beta, names)},
                {"top_alpha", words_json(p.top_alpha, names)},
                {"top_beta", words_json(p.top_beta, names)}};
}

Json to_json(const KnotInput& k, const std::string& kind) {
    auto names = x_names(k.generators);
    Json j{{"kind", kind},
           {"vars", k.nvars},
           {"generators", k.generators},
           {"relators", words_json(k.relators, names)},
           {"phi", expvecs_json(k.phi)},
           {"meridian", render_word(k.meridian, names)}};
    if (k.parallel) j["parallel"] = render_word(*k.parallel, names);
    return j;
}

std::string render_graded_map(const GradedMap& m, int src_genus, int dst_genus) {
    std::ostringstream out;
    out << "degree: " << m.degree << "\n";
    bool any = false;
    for (int j = m.j_min(); j <= m.j_max(); ++j) {
        const FieldMatrix* b = m.block(j);
        if (!b) continue;
        any = true;
        const auto& src = basis_masks(m.src_dim, j);
        const auto& dst = basis_masks(m.dst_dim, j + m.degree);
        out << "block " << j << " -> " << j + m.degree << ":\n";
        for (size_t r = 0; r < dst.size(); ++r) {
            out << "  " << mask_label(dst[r], dst_genus) << " <- ";
            for (size_t c = 0; c < src.size(); ++c) {
                if (c) out << " | ";
                out << mask_label(src[c], src_genus) << ": "
                    << render(b->at(static_cast<int>(r), static_cast<int>(c)));
            }
            out << "\n";
        }
    }
    if (!any) out << "zero map\n";
    return out.str();
}

Json graded_map_json(const GradedMap& m, int src_genus, int dst_genus) {
    Json blocks = Json::object();
    for (const auto& [j, b] : m.blocks) {
        Json rows = Json::array();
        for (int r = 0; r < b.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < b.cols; ++c) row.push_back(render(b.at(r, c)));
            rows.push_back(std::move(row));
        }
        Json bj{{"rows", std::move(rows)},
                {"source_basis", Json::array()},
                {"target_basis", Json::array()}};
        for (uint32_t mask : basis_masks(m.src_dim, j)) bj["source_basis"].push_back(mask_label(mask, src_genus));
        for (uint32_t mask : basis_masks(m.dst_dim, j + m.degree))
            bj["target_basis"].push_back(mask_label(mask, dst_genus));
        blocks[std::to_string(j)] = std::move(bj);
    }
    return Json{{"degree", m.degree}, {"blocks", std::move(blocks)}};
}

}  // namespace alexr
