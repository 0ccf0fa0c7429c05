#pragma once

#include "ilattice/error.hpp"
#include "ilattice/formula.hpp"
#include "ilattice/io.hpp"
#include "ilattice/lattice.hpp"
#include "ilattice/laws.hpp"
#include "ilattice/logic.hpp"
#include "ilattice/partitions.hpp"
#include "ilattice/universe.hpp"
#include "ilattice/verifier.hpp"
