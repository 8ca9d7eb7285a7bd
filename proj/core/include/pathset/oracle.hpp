#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathset/core.hpp"
#include "pathset/rational.hpp"

namespace pathset {

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

/// Reads PATHSET_ENUM_BUDGET, falling back to kDefaultEnumerationBudget.
std::size_t enumeration_budget_from_env();

/// Depth-n digit strings of walks from start, least significant digit first.
/// Strings are sorted lexicographically.
struct PrefixSet {
    int p = 2;
    std::size_t depth = 0;
    std::vector<std::vector<Digit>> strings;

    std::size_t size() const noexcept { return strings.size(); }
    /// Residues sum(d_j p^j) mod p^depth, sorted. Error{EnumerationTooLarge}
    /// when p^depth does not fit in 62 bits.
    std::vector<std::uint64_t> values() const;
};

/// Explicit enumeration. Digit maps are applied first. Throws
/// Error{EnumerationTooLarge} once more than `budget` strings are live.
PrefixSet prefixes(const Presentation& pres, std::size_t depth,
                   std::size_t budget = kDefaultEnumerationBudget);
PrefixSet prefixes(const PathSetHandle& y, std::size_t depth,
                   std::size_t budget = kDefaultEnumerationBudget);

/// Number of length-n walks from start; equals the number of distinct
/// prefixes for right-resolving presentations.
BigInt count_prefixes(const Presentation& pres, std::size_t depth);

/// log_p(count_prefixes(y, n)) / n. Throws Error{EmptySet}.
double empirical_dim(const PathSetHandle& y, std::size_t depth);

enum class ArithKind { Add, Sum, Mul };

struct ArithOp {
    ArithKind kind = ArithKind::Add;
    Rational r;  // ignored for Sum
};

/// p^n for the oracle's residue arithmetic.
std::uint64_t residue_modulus(int p, std::size_t depth);
/// r mod p^n using the inverse of the denominator. Error{NotPIntegral}.
std::uint64_t rational_residue(const Rational& r, int p, std::size_t depth);

/**
 * True iff the output's value set mod p^n equals the exact image of the
 * input value set(s): {y + r}, {y1 + y2} or {r y} mod p^n. Needs one input
 * for Add/Mul and two for Sum.
 */
bool check_arith(const ArithOp& op, std::span<const PathSetHandle> inputs, const PathSetHandle& output,
                 std::size_t depth, std::size_t budget = kDefaultEnumerationBudget);
/// Same check against any presentation, e.g. a raw nondeterministic
/// construction; it is trimmed first so dead-end walks don't count.
bool check_arith(const ArithOp& op, std::span<const PathSetHandle> inputs, const Presentation& output,
                 std::size_t depth, std::size_t budget = kDefaultEnumerationBudget);

}  // namespace pathset
