#pragma once

// Executable forms of the structural facts every model structure and every
// choice of centers on a finite lattice must satisfy. Used by the test and
// acceptance suites and by `posetmc verify --invariants`.

#include "posetmc/centers.hpp"
#include "posetmc/model.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// Requires a verified structure.
Report structure_invariants(const ModelStruct& m);

// Requires a validated choice of centers.
Report center_invariants(const RelStruct& rel, const CenterMap& chi);

}  // namespace posetmc
