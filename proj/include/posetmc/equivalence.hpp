#pragma once

#include <memory>
#include <string>
#include <vector>

#include "posetmc/lattice.hpp"
#include "posetmc/model.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// With shared weak equivalences, the identity is left Quillen from `from`
// to `to` iff cof(from) ⊆ cof(to), and is then a Quillen equivalence.
// Throws MismatchedBase when lattices or weak equivalences differ.
bool is_identity_left_quillen(const ModelStruct& from, const ModelStruct& to);

enum class EdgeDirection { Forward, Backward };  // Forward: node i -> node i+1 is left Quillen

struct Zigzag {
  std::vector<ModelStruct> nodes;
  std::vector<std::string> labels;         // one per node
  std::vector<EdgeDirection> directions;   // one per edge
  std::size_t edges() const noexcept { return directions.size(); }
};

// M1 -> C'1 <- C^chi1 <- C^chi -> C^chi2 -> C'2 <- M2, with chi1, chi2 the
// extracted centers, chi their product and C'i the new-cofibration structure
// of Mi. Empty when M1 and M2 coincide. With `contract`, consecutive nodes
// that are equal are merged.
Zigzag build_zigzag(const ModelStruct& m1, const ModelStruct& m2, bool contract = false);

// One check per edge ("edge_<i>") plus "nodes_verified".
Report verify_zigzag(const Zigzag& z);

struct HomotopyReduction {
  std::shared_ptr<const FiniteLattice> lattice;  // the cofibrant-fibrant objects
  std::shared_ptr<const RelStruct> rel;          // identities only
  ModelStruct structure;                         // we = identities, cof = fib = all
  std::vector<Element> inclusion;                // reduced index -> ambient element
  std::vector<Element> cofibrant_replacement;    // ambient element -> ambient element
  std::vector<Element> projection;               // ambient element -> reduced index
  Report report;
};

// Passes to the sublattice of cofibrant-fibrant objects with the trivial
// model structure, re-validating lattice-hood and the replacement maps.
HomotopyReduction homotopy_reduce(const ModelStruct& m);

}  // namespace posetmc
