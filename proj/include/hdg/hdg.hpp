#pragma once

// Umbrella header: the whole library in one include.

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/io.hpp"
#include "hdg/partition_enum.hpp"
#include "hdg/preferences.hpp"
#include "hdg/rational.hpp"
#include "hdg/reduction.hpp"
#include "hdg/solvers.hpp"
#include "hdg/stability.hpp"
#include "hdg/theta.hpp"
