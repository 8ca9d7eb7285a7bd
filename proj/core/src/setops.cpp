#include "pathset/setops.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pathset/errors.hpp"
#include "pathset/graph.hpp"

namespace pathset {

namespace {

void require_same_p(const PathSetHandle& a, const PathSetHandle& b, const char* what) {
    if (a.p() != b.p()) {
        throw Error(ErrorCode::PMismatch, std::string(what) + " over p = " + std::to_string(a.p()) +
                                              " and p = " + std::to_string(b.p()));
    }
}

using BoolMatrix = std::vector<std::vector<char>>;

BoolMatrix bool_identity(std::size_t n) {
    BoolMatrix m(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    const std::size_t n = a.size();
    BoolMatrix c(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!a[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
        }
    }
    return c;
}

// reach[u][w] = 1 iff some walk of exactly `length` edges leads u -> w.
BoolMatrix exact_reachability(const Graph& g, std::uint64_t length) {
    BoolMatrix step(g.size(), std::vector<char>(g.size(), 0));
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (const Arc& a : g.out[u]) step[u][a.to] = 1;
    }
    BoolMatrix result = bool_identity(g.size());
    while (length > 0) {
        if (length & 1U) result = bool_product(result, step);
        length >>= 1U;
        if (length > 0) step = bool_product(step, step);
    }
    return result;
}

}  // namespace

PathSetHandle set_union(const PathSetHandle& a, const PathSetHandle& b) {
    require_same_p(a, b, "union");
    if (a.empty()) return b;
    if (b.empty()) return a;
    const Graph ga = to_graph(a.presentation());
    const Graph gb = to_graph(b.presentation());

    Graph joint;
    joint.p = ga.p;
    joint.out = ga.out;
    joint.names = ga.names;
    for (auto& name : joint.names) name = "A" + name;
    const std::size_t offset = ga.size();
    for (std::size_t v = 0; v < gb.size(); ++v) {
        joint.names.push_back("B" + gb.names[v]);
        joint.out.emplace_back();
        for (const Arc& arc : gb.out[v]) joint.out.back().push_back({arc.label, arc.to + offset});
    }
    return standardize(to_presentation(subset_construction(joint, {ga.start, gb.start + offset})));
}

PathSetHandle intersect(const PathSetHandle& a, const PathSetHandle& b) {
    require_same_p(a, b, "intersection");
    if (a.empty()) return a;
    if (b.empty()) return b;
    const Graph ga = to_graph(a.presentation());
    const Graph gb = to_graph(b.presentation());

    using Key = std::pair<std::size_t, std::size_t>;
    std::map<Key, std::size_t> ids{{{ga.start, gb.start}, 0}};
    std::vector<Key> keys{{ga.start, gb.start}};
    Graph product;
    product.p = ga.p;
    product.out.emplace_back();
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const auto [u, v] = keys[s];
        for (const Arc& x : ga.out[u]) {
            for (const Arc& z : gb.out[v]) {
                if (x.label != z.label) continue;
                auto [it, inserted] = ids.emplace(Key{x.to, z.to}, keys.size());
                if (inserted) {
                    keys.emplace_back(x.to, z.to);
                    product.out.emplace_back();
                }
                product.out[s].push_back({x.label, it->second});
            }
        }
    }
    for (const auto& [u, v] : keys) product.names.push_back("(" + ga.names[u] + "," + gb.names[v] + ")");
    // standardize trims product states without infinite continuations.
    return standardize(to_presentation(product));
}

PathSetHandle decimate(const PathSetHandle& y, std::int64_t j, std::int64_t m) {
    if (j < 0 || m < 1) throw Error(ErrorCode::Precondition, "decimation needs j >= 0 and m >= 1");
    if (y.empty()) return y;
    const Graph g = to_graph(y.presentation());

    const BoolMatrix skip_start = exact_reachability(g, static_cast<std::uint64_t>(j));
    const BoolMatrix skip_rest = exact_reachability(g, static_cast<std::uint64_t>(m - 1));

    std::vector<std::size_t> start_set;
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (skip_start[g.start][w]) start_set.push_back(w);
    }
    if (start_set.empty()) return PathSetHandle::empty_set(g.p);

    // One decimated step: read a digit, then walk m-1 unread edges.
    Graph stepped;
    stepped.p = g.p;
    stepped.names = g.names;
    stepped.out.resize(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (const Arc& a : g.out[u]) {
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (skip_rest[a.to][w]) stepped.out[u].push_back({a.label, w});
            }
        }
    }
    stepped.normalize();
    return standardize(to_presentation(subset_construction(stepped, start_set)));
}

PathSetHandle shift(const PathSetHandle& y) { return decimate(y, 1, 1); }

}  // namespace pathset
