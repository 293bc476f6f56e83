#pragma once

// Weighted vertex cover toolkit: exact-rational graph model, kernelizations,
// LP relaxation machinery, branching solver, red-blue tree solvers, and the
// brute-force oracles the tests certify everything against.

#include "wvc/bench.hpp"
#include "wvc/branching.hpp"
#include "wvc/gen.hpp"
#include "wvc/graph.hpp"
#include "wvc/io.hpp"
#include "wvc/kernel.hpp"
#include "wvc/lp.hpp"
#include "wvc/oracle.hpp"
#include "wvc/rational.hpp"
#include "wvc/redblue.hpp"
