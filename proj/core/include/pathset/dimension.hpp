#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pathset/core.hpp"

namespace pathset {

/// a[i][j] = number of edges i -> j, vertex order as in the presentation.
struct AdjacencyMatrix {
    std::size_t n = 0;
    std::vector<std::vector<std::uint64_t>> entries;

    bool operator==(const AdjacencyMatrix&) const = default;
};

struct SccInfo {
    std::vector<std::size_t> vertices;  // indices into the presentation's vertex list
    double spectral_radius = 0.0;
};

struct DimensionReport {
    double spectral_radius = 0.0;
    double dimension = 0.0;
    std::vector<double> per_vertex;  // alpha_v, indexed like the vertex list
    std::vector<SccInfo> sccs;       // reverse topological order (sinks first)
};

AdjacencyMatrix adjacency_matrix(const Presentation& pres);

/// Strongly connected components (Tarjan), sinks first.
std::vector<std::vector<std::size_t>> strongly_connected_components(const AdjacencyMatrix& a);

/**
 * Perron root of a nonnegative integer matrix, relative accuracy 1e-12.
 *
 * The radius is the maximum over irreducible diagonal blocks. Each block is
 * shifted by the identity, which makes it primitive, and iterated from the
 * all-ones vector until the Collatz-Wielandt bounds min (Bx)_i/x_i and
 * max (Bx)_i/x_i agree. All-zero (nilpotent) blocks have radius 0.
 * Throws Error{NumericalFailure} after 10^6 iterations.
 */
double spectral_radius(const AdjacencyMatrix& a);

/// Throws Error{EmptySet} for the empty set.
DimensionReport hausdorff_dim(const PathSetHandle& y);

/// alpha_v = log_p max{sigma_H : SCC H reachable from v}, per vertex.
DimensionReport scc_dimensions(const PathSetHandle& y);

}  // namespace pathset
