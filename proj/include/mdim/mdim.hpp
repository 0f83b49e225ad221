#pragma once

// Umbrella header: circulant construction, distance machinery, the three
// landmark-set predicates, exact dimension solvers, and the closed-form
// family checks.

#include "automorphism.hpp"
#include "bitset.hpp"
#include "budget.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "resolving.hpp"
#include "solvers.hpp"
