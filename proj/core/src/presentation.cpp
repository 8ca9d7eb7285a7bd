#include "pathset/presentation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pathset/errors.hpp"

namespace pathset {

namespace {

std::string edge_text(const Edge& e) {
    return "edge [" + std::to_string(e.from) + "," + std::to_string(e.to) + "," + std::to_string(e.label) + "]";
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void check_structure(const Presentation& pres) {
    if (!is_prime(pres.p)) {
        throw Error(ErrorCode::StructuralError, "p = " + std::to_string(pres.p) + " is not a prime");
    }
    std::set<VertexId> ids;
    for (VertexId v : pres.vertices) {
        if (!ids.insert(v).second) {
            throw Error(ErrorCode::StructuralError, "vertex " + std::to_string(v) + " listed twice");
        }
    }
    if (!ids.contains(pres.start)) {
        throw Error(ErrorCode::StructuralError, "start vertex " + std::to_string(pres.start) + " is not a vertex");
    }

    std::set<Symbol> alphabet;
    if (pres.alphabet) {
        alphabet.insert(pres.alphabet->begin(), pres.alphabet->end());
    } else if (pres.digit_map) {
        for (const auto& [sym, digit] : *pres.digit_map) alphabet.insert(sym);
    } else {
        for (Digit d = 0; d < pres.p; ++d) alphabet.insert(d);
    }
    if (pres.digit_map) {
        for (Symbol s : alphabet) {
            auto it = pres.digit_map->find(s);
            if (it == pres.digit_map->end()) {
                throw Error(ErrorCode::StructuralError, "digit_map has no entry for symbol " + std::to_string(s));
            }
        }
        for (const auto& [sym, digit] : *pres.digit_map) {
            if (!alphabet.contains(sym)) {
                throw Error(ErrorCode::StructuralError, "digit_map symbol " + std::to_string(sym) + " not in alphabet");
            }
            if (digit < 0 || digit >= pres.p) {
                throw Error(ErrorCode::StructuralError,
                            "digit_map sends symbol " + std::to_string(sym) + " outside {0,...,p-1}");
            }
        }
    } else {
        for (Symbol s : alphabet) {
            if (s < 0 || s >= pres.p) {
                throw Error(ErrorCode::StructuralError,
                            "symbol " + std::to_string(s) + " is not a digit and there is no digit_map");
            }
        }
    }

    for (const Edge& e : pres.edges) {
        if (!ids.contains(e.from) || !ids.contains(e.to)) {
            throw Error(ErrorCode::StructuralError, edge_text(e) + " has a dangling endpoint");
        }
        if (!alphabet.contains(e.label)) {
            throw Error(ErrorCode::StructuralError, edge_text(e) + " has a label outside the alphabet");
        }
    }
    for (const auto& [v, name] : pres.names) {
        if (!ids.contains(v)) {
            throw Error(ErrorCode::StructuralError, "name given for unknown vertex " + std::to_string(v));
        }
    }
}

std::vector<Edge> dedupe_edges(Presentation& pres) {
    std::set<Edge> seen;
    std::vector<Edge> kept;
    std::vector<Edge> removed;
    kept.reserve(pres.edges.size());
    for (const Edge& e : pres.edges) {
        if (seen.insert(e).second) {
            kept.push_back(e);
        } else {
            removed.push_back(e);
        }
    }
    pres.edges = std::move(kept);
    return removed;
}

Presentation digit_set_presentation(int p, const std::vector<Digit>& digits) {
    Presentation pres;
    pres.p = p;
    pres.vertices = {0};
    pres.start = 0;
    std::vector<Digit> sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Digit d : sorted) pres.edges.push_back({0, 0, d});
    check_structure(pres);
    return pres;
}

}  // namespace pathset
