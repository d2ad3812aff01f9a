#pragma once

// Umbrella header: pulls in the whole library.

#include "hanoi/analysis.hpp"
#include "hanoi/arc_predicate.hpp"
#include "hanoi/combinatorics.hpp"
#include "hanoi/degrees.hpp"
#include "hanoi/export.hpp"
#include "hanoi/graph_builder.hpp"
#include "hanoi/json_io.hpp"
#include "hanoi/movement_digraph.hpp"
#include "hanoi/state.hpp"
