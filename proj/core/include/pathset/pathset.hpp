#pragma once

// Umbrella header for the pathset library.

#include "pathset/arithmetic.hpp"
#include "pathset/core.hpp"
#include "pathset/dimension.hpp"
#include "pathset/errors.hpp"
#include "pathset/graph.hpp"
#include "pathset/json_io.hpp"
#include "pathset/oracle.hpp"
#include "pathset/presentation.hpp"
#include "pathset/rational.hpp"
#include "pathset/setops.hpp"
