#include "pathset/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "pathset/errors.hpp"

namespace pathset {

std::size_t Graph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& arcs : out) total += arcs.size();
    return total;
}

void Graph::normalize() {
    for (auto& arcs : out) {
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    }
}

Graph to_graph(const Presentation& pres) {
    if (!pres.has_identity_digits()) {
        throw Error(ErrorCode::Precondition, "operation requires an identity digit map; apply the digit map first");
    }
    std::unordered_map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < pres.vertices.size(); ++i) index.emplace(pres.vertices[i], i);

    Graph g;
    g.p = pres.p;
    g.out.resize(pres.vertices.size());
    g.names.resize(pres.vertices.size());
    g.start = index.at(pres.start);
    for (std::size_t i = 0; i < pres.vertices.size(); ++i) {
        auto it = pres.names.find(pres.vertices[i]);
        g.names[i] = it != pres.names.end() ? it->second : std::to_string(pres.vertices[i]);
    }
    for (const Edge& e : pres.edges) {
        g.add_arc(index.at(e.from), static_cast<Digit>(e.label), index.at(e.to));
    }
    return g;
}

Presentation to_presentation(const Graph& graph) {
    Presentation pres;
    pres.p = graph.p;
    pres.start = static_cast<VertexId>(graph.start);
    pres.vertices.reserve(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) {
        pres.vertices.push_back(static_cast<VertexId>(v));
        if (v < graph.names.size() && !graph.names[v].empty()) {
            pres.names.emplace(static_cast<VertexId>(v), graph.names[v]);
        }
        for (const Arc& a : graph.out[v]) {
            pres.edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(a.to), a.label});
        }
    }
    return pres;
}

Graph renumber_bfs(const Graph& graph) {
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order;
    std::vector<std::size_t> id(graph.size(), unseen);
    std::deque<std::size_t> queue{graph.start};
    id[graph.start] = 0;
    order.push_back(graph.start);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        std::vector<Arc> arcs = graph.out[v];
        std::sort(arcs.begin(), arcs.end());
        for (const Arc& a : arcs) {
            if (id[a.to] == unseen) {
                id[a.to] = order.size();
                order.push_back(a.to);
                queue.push_back(a.to);
            }
        }
    }

    Graph result;
    result.p = graph.p;
    result.start = 0;
    result.out.resize(order.size());
    result.names.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t old = order[i];
        if (old < graph.names.size()) result.names[i] = graph.names[old];
        for (const Arc& a : graph.out[old]) result.out[i].push_back({a.label, id[a.to]});
    }
    result.normalize();
    return result;
}

bool is_right_resolving(const Graph& graph) {
    for (const auto& arcs : graph.out) {
        std::vector<Digit> labels;
        for (const Arc& a : arcs) labels.push_back(a.label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
    return true;
}

bool is_right_separating(const Graph& graph) {
    for (const auto& arcs : graph.out) {
        std::vector<std::size_t> targets;
        for (const Arc& a : arcs) targets.push_back(a.to);
        std::sort(targets.begin(), targets.end());
        if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;
    }
    return true;
}

namespace {

std::string subset_name(const Graph& graph, const std::vector<std::size_t>& subset) {
    auto single = [&](std::size_t v) {
        return v < graph.names.size() && !graph.names[v].empty() ? graph.names[v] : std::to_string(v);
    };
    if (subset.size() == 1) return single(subset.front());
    std::string name = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) name += ",";
        name += single(subset[i]);
    }
    return name + "}";
}

}  // namespace

Graph subset_construction(const Graph& graph, std::vector<std::size_t> start_set, std::size_t max_states) {
    std::sort(start_set.begin(), start_set.end());
    start_set.erase(std::unique(start_set.begin(), start_set.end()), start_set.end());
    if (start_set.empty()) throw std::invalid_argument("subset_construction: empty start set");

    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::vector<std::size_t>> states;
    Graph result;
    result.p = graph.p;
    result.start = 0;

    auto intern = [&](std::vector<std::size_t> subset) {
        auto [it, inserted] = ids.emplace(subset, states.size());
        if (inserted) {
            // Sums of path sets can need exponentially many subsets.
            if (states.size() == max_states) {
                throw Error(ErrorCode::EnumerationTooLarge,
                            "determinization needs more than " + std::to_string(max_states) + " states");
            }
            states.push_back(std::move(subset));
            result.out.emplace_back();
        }
        return it->second;
    };
    intern(std::move(start_set));

    std::vector<std::vector<std::size_t>> successors(static_cast<std::size_t>(graph.p));
    for (std::size_t s = 0; s < states.size(); ++s) {
        for (auto& bucket : successors) bucket.clear();
        for (std::size_t v : states[s]) {
            for (const Arc& a : graph.out[v]) successors[static_cast<std::size_t>(a.label)].push_back(a.to);
        }
        for (Digit d = 0; d < graph.p; ++d) {
            auto& bucket = successors[static_cast<std::size_t>(d)];
            if (bucket.empty()) continue;
            std::sort(bucket.begin(), bucket.end());
            bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
            std::size_t target = intern(bucket);
            result.out[s].push_back({d, target});
        }
    }
    result.names.reserve(states.size());
    for (const auto& subset : states) result.names.push_back(subset_name(graph, subset));
    return result;
}

}  // namespace pathset
