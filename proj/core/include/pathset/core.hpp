#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathset/presentation.hpp"

namespace pathset {

struct OffendingItem {
    std::string item;    // e.g. "vertex 3", "edge [0,1,2]", "symbol 5"
    std::string reason;

    bool operator==(const OffendingItem&) const = default;
};

struct ValidationReport {
    bool right_resolving = true;
    bool reachable = true;
    bool injective_digit_map = true;
    bool all_vertices_have_exit = true;
    std::vector<OffendingItem> offending_items;

    bool standard() const noexcept { return right_resolving && reachable && injective_digit_map; }
    bool trimmed() const noexcept { return standard() && all_vertices_have_exit; }
    bool operator==(const ValidationReport&) const = default;
};

/**
 * A path set in canonical working form: a trimmed, right-resolving,
 * reachable presentation with identity digit map, vertices numbered
 * 0..n-1 in breadth-first order and start 0. The empty set is a distinct
 * value that still remembers its base.
 *
 * Only produced by `standardize` and the set-level operations.
 */
class PathSetHandle {
public:
    static PathSetHandle empty_set(int p) { return PathSetHandle(p); }
    /// Trusts that `pres` is already in canonical working form.
    static PathSetHandle from_canonical(Presentation pres) { return PathSetHandle(std::move(pres)); }

    int p() const noexcept { return p_; }
    bool empty() const noexcept { return !presentation_.has_value(); }
    /// Throws Error{EmptySet} for the empty set.
    const Presentation& presentation() const;
    std::size_t vertex_count() const noexcept { return empty() ? 0 : presentation_->vertices.size(); }

    /// Presentation JSON for the empty set is a single vertex with no edges.
    Presentation to_presentation() const;

    bool operator==(const PathSetHandle&) const = default;

private:
    explicit PathSetHandle(int p) : p_(p) {}
    explicit PathSetHandle(Presentation pres) : p_(pres.p), presentation_(std::move(pres)) {}

    int p_;
    std::optional<Presentation> presentation_;
};

ValidationReport validate(const Presentation& pres);

/// Deletes exit-less vertices to a fixpoint, then unreachable ones. Returns
/// nullopt when the start vertex is deleted. Ids and names are preserved.
std::optional<Presentation> trim(const Presentation& pres);

Presentation apply_digit_map(const Presentation& pres);

/// Subset construction restricted to the part reachable from start. Output
/// vertices are 0..n-1 with start 0; names list the underlying vertex ids.
Presentation determinize(const Presentation& pres);

PathSetHandle standardize(const Presentation& pres);

/// Repeated vertex splitting until no ordered vertex pair carries two
/// parallel edges. Input must be standard and trimmed.
Presentation split_right_separating(const Presentation& pres);

/// True iff both presentations denote the same subset of Z_p. Throws
/// Error{PMismatch} for different bases.
bool equivalent(const Presentation& a, const Presentation& b);
bool equivalent(const PathSetHandle& a, const PathSetHandle& b);

}  // namespace pathset
