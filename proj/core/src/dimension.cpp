#include "pathset/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "pathset/errors.hpp"

namespace pathset {

AdjacencyMatrix adjacency_matrix(const Presentation& pres) {
    std::unordered_map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < pres.vertices.size(); ++i) index.emplace(pres.vertices[i], i);
    AdjacencyMatrix a;
    a.n = pres.vertices.size();
    a.entries.assign(a.n, std::vector<std::uint64_t>(a.n, 0));
    for (const Edge& e : pres.edges) ++a.entries[index.at(e.from)][index.at(e.to)];
    return a;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const AdjacencyMatrix& a) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    const std::size_t n = a.n;
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.entries[i][j] > 0) succ[i].push_back(j);
        }
    }

    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    // Iterative Tarjan: frames hold (vertex, next successor position).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < succ[v].size()) {
                std::size_t w = succ[v][pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<std::size_t> component;
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != done);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    return components;
}

namespace {

constexpr std::size_t kMaxIterations = 1'000'000;

// Perron root of the irreducible block of `a` on `block`.
double block_radius(const AdjacencyMatrix& a, const std::vector<std::size_t>& block) {
    const std::size_t n = block.size();
    if (n == 1 && a.entries[block[0]][block[0]] == 0) return 0.0;

    std::vector<std::vector<double>> shifted(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) shifted[i][j] = static_cast<double>(a.entries[block[i]][block[j]]);
        shifted[i][i] += 1.0;
    }

    std::vector<double> x(n, 1.0);
    std::vector<double> y(n, 0.0);
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) sum += shifted[i][j] * x[j];
            y[i] = sum;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        double top = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ratio = y[i] / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            top = std::max(top, y[i]);
        }
        // Collatz-Wielandt: lo <= rho(A + I) <= hi.
        if (hi - lo <= 5e-13 * std::max(1.0, lo - 1.0)) return 0.5 * (lo + hi) - 1.0;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    }

    std::ostringstream detail;
    detail.precision(17);
    detail << "power iteration did not converge; last bounds [" << lo - 1.0 << ", " << hi - 1.0
           << "], last iterate (";
    for (std::size_t i = 0; i < n; ++i) detail << (i ? "," : "") << x[i];
    detail << ")";
    throw Error(ErrorCode::NumericalFailure, detail.str());
}

double log_base(double value, int p) { return std::log(value) / std::log(static_cast<double>(p)); }

}  // namespace

double spectral_radius(const AdjacencyMatrix& a) {
    double radius = 0.0;
    for (const auto& block : strongly_connected_components(a)) radius = std::max(radius, block_radius(a, block));
    return radius;
}

DimensionReport scc_dimensions(const PathSetHandle& y) {
    const Presentation& pres = y.presentation();
    const AdjacencyMatrix a = adjacency_matrix(pres);

    DimensionReport report;
    const auto components = strongly_connected_components(a);
    std::vector<std::size_t> component_of(a.n, 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (std::size_t v : components[c]) component_of[v] = c;
        report.sccs.push_back({components[c], block_radius(a, components[c])});
    }

    // Tarjan emits sinks first, so every successor component is final
    // before its predecessors are visited.
    std::vector<double> reachable_max(components.size(), 0.0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        double best = report.sccs[c].spectral_radius;
        for (std::size_t v : components[c]) {
            for (std::size_t w = 0; w < a.n; ++w) {
                if (a.entries[v][w] > 0 && component_of[w] != c) best = std::max(best, reachable_max[component_of[w]]);
            }
        }
        reachable_max[c] = best;
        report.spectral_radius = std::max(report.spectral_radius, report.sccs[c].spectral_radius);
    }

    report.per_vertex.resize(a.n);
    for (std::size_t v = 0; v < a.n; ++v) report.per_vertex[v] = log_base(reachable_max[component_of[v]], y.p());
    report.dimension = log_base(report.spectral_radius, y.p());
    return report;
}

DimensionReport hausdorff_dim(const PathSetHandle& y) {
    if (y.empty()) throw Error(ErrorCode::EmptySet, "Hausdorff dimension of the empty set is undefined");
    return scc_dimensions(y);
}

}  // namespace pathset
