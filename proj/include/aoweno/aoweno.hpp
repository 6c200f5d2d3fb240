#pragma once

// Umbrella header: the whole library.

#include "aoweno/common.hpp"
#include "aoweno/config.hpp"
#include "aoweno/csv.hpp"
#include "aoweno/grid.hpp"
#include "aoweno/harness.hpp"
#include "aoweno/physics.hpp"
#include "aoweno/problems.hpp"
#include "aoweno/props.hpp"
#include "aoweno/reference.hpp"
#include "aoweno/rhs.hpp"
#include "aoweno/riemann.hpp"
#include "aoweno/run.hpp"
#include "aoweno/stencil.hpp"
#include "aoweno/time_integration.hpp"

namespace aoweno {}
