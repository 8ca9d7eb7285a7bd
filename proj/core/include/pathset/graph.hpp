#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathset/presentation.hpp"

namespace pathset {

struct Arc {
    Digit label = 0;
    std::size_t to = 0;

    auto operator<=>(const Arc&) const = default;
};

/// Dense working form of a presentation with identity digit map: vertices are
/// indices 0..n-1 and arcs are stored per source vertex.
struct Graph {
    int p = 2;
    std::size_t start = 0;
    std::vector<std::vector<Arc>> out;
    std::vector<std::string> names;

    std::size_t size() const noexcept { return out.size(); }
    std::size_t edge_count() const noexcept;
    void add_arc(std::size_t from, Digit label, std::size_t to) { out[from].push_back({label, to}); }
    /// Sorts every arc list by (label, target) and drops exact duplicates.
    void normalize();
};

/// Requires an identity digit map. Vertex i of the result is pres.vertices[i].
Graph to_graph(const Presentation& pres);

/// Emits vertices 0..n-1 with start index mapped to itself; callers that need
/// start = 0 renumber first with `renumber_bfs`.
Presentation to_presentation(const Graph& graph);

/// Renumbers vertices in breadth-first order from start, visiting arcs by
/// ascending label, and drops unreachable vertices. Start becomes 0.
Graph renumber_bfs(const Graph& graph);

bool is_right_resolving(const Graph& graph);
bool is_right_separating(const Graph& graph);

/**
 * Subset construction from an arbitrary nonempty start set. States are
 * sorted duplicate-free lists of input vertices; the state for `start_set`
 * is 0 and the rest are numbered in discovery order (breadth-first, arcs by
 * ascending digit). Transitions to the empty set are omitted.
 * Throws Error{EnumerationTooLarge} once more than `max_states` subsets exist.
 */
inline constexpr std::size_t kSubsetStateLimit = 1'000'000;
Graph subset_construction(const Graph& graph, std::vector<std::size_t> start_set,
                          std::size_t max_states = kSubsetStateLimit);

}  // namespace pathset
