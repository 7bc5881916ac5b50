// JSON input documents and report rendering for the command-line front end.
// One document describes one cobordism (or knot); words use the whitespace
// syntax of parse_word and phi values are arrays of integer exponent vectors.

#pragma once

#include "alexr/functor.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace alexr {

using Json = nlohmann::json;

struct SessionConfig {
    int vars = 1;
    uint64_t seed = 1;
    bool json_output = false;
};

struct InputDocument {
    std::string kind;  // heegaard-word | presented-cobordism | knot | closed-manifold
    int vars = 0;
    std::variant<HeegaardWord, PresentedCobordism, KnotInput> payload;

    const HeegaardWord& word() const { return std::get<HeegaardWord>(payload); }
    const PresentedCobordism& presented() const { return std::get<PresentedCobordism>(payload); }
    const KnotInput& knot() const { return std::get<KnotInput>(payload); }
};

InputDocument parse_document(const Json& j);
InputDocument load_document(const std::string& path);

Json to_json(const HeegaardWord& w);
Json to_json(const PresentedCobordism& p);
Json to_json(const KnotInput& k, const std::string& kind);

// Blockwise rendering of a unit-normalized graded map; genus labels come from
// the source/target objects.
std::string render_graded_map(const GradedMap& m, int src_genus, int dst_genus);
Json graded_map_json(const GradedMap& m, int src_genus, int dst_genus);

}  // namespace alexr
