#pragma once

#include <string>

#include "posetmc/model.hpp"
#include "posetmc/relative.hpp"

namespace posetmc {

// Graphviz rendering of the Hasse diagram plus every non-identity weak
// equivalence. Weak equivalences are black and labelled "~", other edges
// are green. With a structure, cofibrations get a hooked tail and
// fibrations a double head. Nodes and edges are emitted in index order.
std::string export_dot(const RelStruct& rel);
std::string export_dot(const ModelStruct& m);

}  // namespace posetmc
