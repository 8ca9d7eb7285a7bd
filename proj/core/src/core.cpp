#include "pathset/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "pathset/errors.hpp"
#include "pathset/graph.hpp"

namespace pathset {

const Presentation& PathSetHandle::presentation() const {
    if (!presentation_) throw Error(ErrorCode::EmptySet, "the path set is empty");
    return *presentation_;
}

Presentation PathSetHandle::to_presentation() const {
    if (presentation_) return *presentation_;
    Presentation pres;
    pres.p = p_;
    pres.vertices = {0};
    pres.start = 0;
    return pres;
}

ValidationReport validate(const Presentation& pres) {
    check_structure(pres);
    ValidationReport report;

    std::map<VertexId, std::vector<const Edge*>> exits;
    for (const Edge& e : pres.edges) exits[e.from].push_back(&e);

    for (VertexId v : pres.vertices) {
        auto it = exits.find(v);
        if (it == exits.end()) {
            report.all_vertices_have_exit = false;
            report.offending_items.push_back({"vertex " + std::to_string(v), "has no exit edge"});
            continue;
        }
        std::map<Symbol, int> label_count;
        for (const Edge* e : it->second) ++label_count[e->label];
        for (const auto& [label, count] : label_count) {
            if (count > 1) {
                report.right_resolving = false;
                report.offending_items.push_back(
                    {"vertex " + std::to_string(v),
                     std::to_string(count) + " exit edges share label " + std::to_string(label)});
            }
        }
    }

    std::set<VertexId> seen{pres.start};
    std::deque<VertexId> queue{pres.start};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        auto it = exits.find(v);
        if (it == exits.end()) continue;
        for (const Edge* e : it->second) {
            if (seen.insert(e->to).second) queue.push_back(e->to);
        }
    }
    for (VertexId v : pres.vertices) {
        if (!seen.contains(v)) {
            report.reachable = false;
            report.offending_items.push_back({"vertex " + std::to_string(v), "unreachable from start"});
        }
    }

    if (pres.digit_map) {
        std::map<Digit, std::vector<Symbol>> preimages;
        for (const auto& [sym, digit] : *pres.digit_map) preimages[digit].push_back(sym);
        for (const auto& [digit, symbols] : preimages) {
            if (symbols.size() > 1) {
                report.injective_digit_map = false;
                report.offending_items.push_back(
                    {"digit " + std::to_string(digit),
                     "assigned to " + std::to_string(symbols.size()) + " symbols"});
            }
        }
    }
    return report;
}

std::optional<Presentation> trim(const Presentation& pres) {
    std::set<VertexId> alive(pres.vertices.begin(), pres.vertices.end());

    // Exit-less deletion to a fixpoint.
    std::map<VertexId, std::size_t> out_degree;
    std::map<VertexId, std::vector<VertexId>> predecessors;
    for (const Edge& e : pres.edges) {
        ++out_degree[e.from];
        predecessors[e.to].push_back(e.from);
    }
    std::deque<VertexId> dead;
    for (VertexId v : pres.vertices) {
        if (out_degree[v] == 0) dead.push_back(v);
    }
    while (!dead.empty()) {
        VertexId v = dead.front();
        dead.pop_front();
        if (!alive.erase(v)) continue;
        for (VertexId u : predecessors[v]) {
            if (alive.contains(u) && --out_degree[u] == 0) dead.push_back(u);
        }
    }
    if (!alive.contains(pres.start)) return std::nullopt;

    std::map<VertexId, std::vector<VertexId>> successors;
    for (const Edge& e : pres.edges) {
        if (alive.contains(e.from) && alive.contains(e.to)) successors[e.from].push_back(e.to);
    }
    std::set<VertexId> reached{pres.start};
    std::deque<VertexId> queue{pres.start};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : successors[v]) {
            if (reached.insert(w).second) queue.push_back(w);
        }
    }

    Presentation result = pres;
    result.vertices.clear();
    for (VertexId v : pres.vertices) {
        if (reached.contains(v)) result.vertices.push_back(v);
    }
    result.edges.clear();
    for (const Edge& e : pres.edges) {
        if (reached.contains(e.from) && reached.contains(e.to)) result.edges.push_back(e);
    }
    std::erase_if(result.names, [&](const auto& entry) { return !reached.contains(entry.first); });
    return result;
}

Presentation apply_digit_map(const Presentation& pres) {
    Presentation result = pres;
    if (pres.digit_map) {
        for (Edge& e : result.edges) e.label = pres.digit_map->at(e.label);
    }
    result.alphabet.reset();
    result.digit_map.reset();
    return result;
}

Presentation determinize(const Presentation& pres) {
    Graph g = to_graph(pres);
    return to_presentation(subset_construction(g, {g.start}));
}

namespace {

// Graph-level trim; start index may change. Returns nullopt if start dies.
std::optional<Graph> trim_graph(const Graph& g) {
    std::optional<Presentation> trimmed = trim(to_presentation(g));
    if (!trimmed) return std::nullopt;
    return to_graph(*trimmed);
}

}  // namespace

PathSetHandle standardize(const Presentation& pres) {
    check_structure(pres);
    std::optional<Presentation> trimmed = trim(apply_digit_map(pres));
    if (!trimmed) return PathSetHandle::empty_set(pres.p);
    Graph g = to_graph(*trimmed);
    std::optional<Graph> det = trim_graph(subset_construction(g, {g.start}));
    if (!det) return PathSetHandle::empty_set(pres.p);
    return PathSetHandle::from_canonical(to_presentation(renumber_bfs(*det)));
}

Presentation split_right_separating(const Presentation& pres) {
    constexpr std::size_t kVertexLimit = 1'000'000;
    Graph g = to_graph(pres);
    g.normalize();
    if (!is_right_resolving(g)) {
        throw Error(ErrorCode::Precondition, "split_right_separating requires a right-resolving presentation");
    }

    while (true) {
        // Smallest (vertex, entering vertex) pair carrying parallel edges.
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Digit>> entering;
        for (std::size_t w = 0; w < g.size(); ++w) {
            for (const Arc& a : g.out[w]) entering[{a.to, w}].push_back(a.label);
        }
        auto violation = std::find_if(entering.begin(), entering.end(),
                                      [](const auto& entry) { return entry.second.size() >= 2; });
        if (violation == entering.end()) break;

        const auto [v, w] = violation->first;
        std::vector<Digit> labels = violation->second;
        std::sort(labels.begin(), labels.end());
        const std::size_t k = labels.size();
        if (g.size() + k > kVertexLimit) {
            throw std::length_error("split_right_separating: vertex limit exceeded");
        }

        // copies[0] is v itself; the others are appended.
        std::vector<std::size_t> copies{v};
        for (std::size_t i = 1; i < k; ++i) {
            copies.push_back(g.size());
            g.out.emplace_back();
            g.names.push_back(g.names[v] + "(" + std::to_string(i + 1) + ")");
        }

        std::vector<Arc> exits;
        std::vector<Digit> loops;
        for (const Arc& a : g.out[v]) {
            if (a.to == v) {
                loops.push_back(a.label);
            } else {
                exits.push_back(a);
            }
        }

        if (w != v) {
            for (std::size_t i = 1; i < k; ++i) {
                auto& arcs = g.out[copies[i]];
                arcs = exits;
                for (Digit l : loops) arcs.push_back({l, copies[i]});
            }
            for (Arc& a : g.out[w]) {
                if (a.to != v) continue;
                auto pos = std::find(labels.begin(), labels.end(), a.label);
                a.to = copies[static_cast<std::size_t>(pos - labels.begin())];
            }
        } else {
            // k self-loops: copy i gets an edge to copy j labelled by loop
            // index (i + j + 1) mod k, counting copies and loops from 0.
            for (std::size_t i = 0; i < k; ++i) {
                auto& arcs = g.out[copies[i]];
                arcs = exits;
                for (std::size_t j = 0; j < k; ++j) arcs.push_back({labels[(i + j + 1) % k], copies[j]});
            }
        }
        g.normalize();
    }
    return to_presentation(renumber_bfs(g));
}

bool equivalent(const PathSetHandle& a, const PathSetHandle& b) {
    if (a.p() != b.p()) {
        throw Error(ErrorCode::PMismatch,
                    "cannot compare path sets over p = " + std::to_string(a.p()) + " and p = " + std::to_string(b.p()));
    }
    if (a.empty() || b.empty()) return a.empty() && b.empty();

    const Graph ga = to_graph(a.presentation());
    const Graph gb = to_graph(b.presentation());
    std::set<std::pair<std::size_t, std::size_t>> seen{{ga.start, gb.start}};
    std::deque<std::pair<std::size_t, std::size_t>> queue{{ga.start, gb.start}};
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        const auto& arcs_u = ga.out[u];
        const auto& arcs_v = gb.out[v];
        if (arcs_u.size() != arcs_v.size()) return false;
        // Canonical graphs keep arcs sorted by label, so labels pair up index-wise.
        for (std::size_t i = 0; i < arcs_u.size(); ++i) {
            if (arcs_u[i].label != arcs_v[i].label) return false;
            std::pair next{arcs_u[i].to, arcs_v[i].to};
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return true;
}

bool equivalent(const Presentation& a, const Presentation& b) {
    if (a.p != b.p) {
        throw Error(ErrorCode::PMismatch,
                    "cannot compare path sets over p = " + std::to_string(a.p) + " and p = " + std::to_string(b.p));
    }
    return equivalent(standardize(a), standardize(b));
}

}  // namespace pathset
