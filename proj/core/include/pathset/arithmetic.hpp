#pragma once

#include <cstddef>
#include <cstdint>

#include "pathset/core.hpp"
#include "pathset/rational.hpp"

namespace pathset {

/// Raw output of a carry-automaton construction, before standardization.
struct Construction {
    Presentation raw;             // reachable states only; start 0
    std::size_t state_count = 0;  // == raw.vertices.size()
    std::int64_t min_carry = 0;
    std::int64_t max_carry = 0;
};

// Raw constructions. Each requires a nonempty input handle (Error{EmptySet}
// otherwise) and checks its state-count and carry bounds, throwing
// std::logic_error if one is ever exceeded.

/// {y + r}: states (v, digit index into preperiod+period of r, carry).
Construction build_add_rational(const PathSetHandle& y, const Rational& r);
/// {y1 + y2}: states (v1, v2, carry). Generally not right-resolving.
Construction build_minkowski_sum(const PathSetHandle& a, const PathSetHandle& b);
/// {M y} for gcd(M, p) = 1: states (v, carry), 0 <= carry <= M.
Construction build_mul_coprime_int(const PathSetHandle& y, std::int64_t m);
/// {y / M} for gcd(M, p) = 1: states (v, carry), 0 <= carry <= M.
Construction build_div_coprime_int(const PathSetHandle& y, std::int64_t m);
/// {-y}: states (v, carry) with carry in {0, -1}.
Construction build_negate(const PathSetHandle& y);
/// {p^k y}: k zero-labeled chain vertices in front of the start.
Construction build_mul_p_power(const PathSetHandle& y, std::int64_t k);

// Set-level operations. Empty inputs give the empty set.

PathSetHandle add_rational(const PathSetHandle& y, const Rational& r);
PathSetHandle minkowski_sum(const PathSetHandle& a, const PathSetHandle& b);
PathSetHandle mul_coprime_int(const PathSetHandle& y, std::int64_t m);
PathSetHandle div_coprime_int(const PathSetHandle& y, std::int64_t m);
PathSetHandle negate(const PathSetHandle& y);
PathSetHandle mul_p_power(const PathSetHandle& y, std::int64_t k);
/// r = (-1)^a p^k M1/M2 applied as p^k, then sign, then 1/M2, then M1.
PathSetHandle mul_rational(const PathSetHandle& y, const Rational& r);

}  // namespace pathset
