#include "pathset/json_io.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "pathset/errors.hpp"

namespace pathset {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::StructuralError, what); }

std::int64_t parse_int_key(const std::string& key, const char* field) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return value;
    } catch (const std::exception&) {
        fail(std::string(field) + " key '" + key + "' is not an integer");
    }
}

std::int64_t as_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

ParsedPresentation presentation_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known{"p", "start", "vertices", "edges", "alphabet", "digit_map", "names"};
    if (!j.is_object()) fail("presentation must be a JSON object");
    for (const auto& item : j.items()) {
        if (!known.contains(item.key())) fail("unknown field '" + item.key() + "'");
    }
    for (const char* required : {"p", "start", "vertices", "edges"}) {
        if (!j.contains(required)) fail(std::string("missing field '") + required + "'");
    }

    ParsedPresentation parsed;
    Presentation& pres = parsed.presentation;
    const std::int64_t p = as_int(j.at("p"), "p");
    if (p < 2 || p > (1 << 20)) fail("p out of range");
    pres.p = static_cast<int>(p);
    pres.start = as_int(j.at("start"), "start");

    if (!j.at("vertices").is_array()) fail("vertices must be an array");
    for (const auto& v : j.at("vertices")) pres.vertices.push_back(as_int(v, "vertex id"));

    if (!j.at("edges").is_array()) fail("edges must be an array");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) fail("edge " + e.dump() + " must be a [from,to,label] triple");
        pres.edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"), as_int(e[2], "edge label")});
    }

    if (j.contains("alphabet") && !j.at("alphabet").is_null()) {
        if (!j.at("alphabet").is_array()) fail("alphabet must be null or an array");
        std::vector<Symbol> alphabet;
        for (const auto& s : j.at("alphabet")) alphabet.push_back(as_int(s, "alphabet symbol"));
        pres.alphabet = std::move(alphabet);
    }
    if (j.contains("digit_map") && !j.at("digit_map").is_null()) {
        if (!j.at("digit_map").is_object()) fail("digit_map must be null or an object");
        std::map<Symbol, Digit> map;
        for (const auto& item : j.at("digit_map").items()) {
            map[parse_int_key(item.key(), "digit_map")] = static_cast<Digit>(as_int(item.value(), "digit"));
        }
        pres.digit_map = std::move(map);
    }
    if (j.contains("names")) {
        if (!j.at("names").is_object()) fail("names must be an object");
        for (const auto& item : j.at("names").items()) {
            if (!item.value().is_string()) fail("names values must be strings");
            pres.names[parse_int_key(item.key(), "names")] = item.value().get<std::string>();
        }
    }

    for (const Edge& e : dedupe_edges(pres)) {
        parsed.warnings.push_back("dropped duplicate edge [" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                  "," + std::to_string(e.label) + "]");
    }
    check_structure(pres);
    return parsed;
}

ParsedPresentation presentation_from_string(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    return presentation_from_json(j);
}

nlohmann::ordered_json presentation_to_json(const Presentation& pres) {
    nlohmann::ordered_json j;
    j["p"] = pres.p;
    j["start"] = pres.start;
    j["vertices"] = pres.vertices;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : pres.edges) edges.push_back({e.from, e.to, e.label});
    j["edges"] = std::move(edges);
    j["alphabet"] = pres.alphabet ? nlohmann::ordered_json(*pres.alphabet) : nlohmann::ordered_json(nullptr);
    if (pres.digit_map) {
        auto map = nlohmann::ordered_json::object();
        for (const auto& [sym, digit] : *pres.digit_map) map[std::to_string(sym)] = digit;
        j["digit_map"] = std::move(map);
    } else {
        j["digit_map"] = nullptr;
    }
    auto names = nlohmann::ordered_json::object();
    for (VertexId v : pres.vertices) {
        auto it = pres.names.find(v);
        if (it != pres.names.end()) names[std::to_string(v)] = it->second;
    }
    j["names"] = std::move(names);
    return j;
}

std::string presentation_to_string(const Presentation& pres) { return presentation_to_json(pres).dump(); }

}  // namespace pathset
