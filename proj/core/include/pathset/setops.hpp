#pragma once

#include <cstdint>

#include "pathset/core.hpp"

namespace pathset {

PathSetHandle set_union(const PathSetHandle& a, const PathSetHandle& b);
PathSetHandle intersect(const PathSetHandle& a, const PathSetHandle& b);

/// Keeps digits j, j+m, j+2m, ... of every element.
PathSetHandle decimate(const PathSetHandle& y, std::int64_t j, std::int64_t m);

/// Drops the least significant digit of every element.
PathSetHandle shift(const PathSetHandle& y);

}  // namespace pathset
