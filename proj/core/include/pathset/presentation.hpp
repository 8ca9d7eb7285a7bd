#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathset {

using VertexId = std::int64_t;
using Symbol = std::int64_t;
using Digit = int;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    Symbol label = 0;

    auto operator<=>(const Edge&) const = default;
};

/**
 * Pointed edge-labeled multigraph together with a prime base and an optional
 * digit assignment map. Denotes the closed subset of Z_p whose elements have
 * digit expansions equal to the (mapped) label sequences of infinite walks
 * leaving `start`.
 *
 * An absent `alphabet` means {0,...,p-1}; an absent `digit_map` means the
 * identity. `names` carries optional display names and never affects
 * semantics.
 */
struct Presentation {
    int p = 2;
    std::vector<VertexId> vertices;
    VertexId start = 0;
    std::vector<Edge> edges;
    std::optional<std::vector<Symbol>> alphabet;
    std::optional<std::map<Symbol, Digit>> digit_map;
    std::map<VertexId, std::string> names;

    bool operator==(const Presentation&) const = default;

    bool has_identity_digits() const noexcept { return !digit_map.has_value(); }
    std::size_t vertex_count() const noexcept { return vertices.size(); }
};

bool is_prime(std::int64_t n) noexcept;

/// Throws Error{StructuralError} naming the first dangling id, label outside
/// the alphabet, non-prime base or partial digit map.
void check_structure(const Presentation& pres);

/// Removes parallel duplicate edges (same from, to and label). Returns the
/// removed edges so callers can warn about them.
std::vector<Edge> dedupe_edges(Presentation& pres);

/// Convenience constructor for the full-digit Cantor set Sigma_p(D): one
/// vertex with a self-loop per digit in D.
Presentation digit_set_presentation(int p, const std::vector<Digit>& digits);

}  // namespace pathset
