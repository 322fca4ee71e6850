#pragma once

// Lifting calculus on a finite lattice: the relation f ⧄ g, its two
// complements, closure tests, and maximal-lifting / weak-factorization
// system checks.

#include <vector>

#include "posetmc/lattice.hpp"
#include "posetmc/morph_class.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// True iff f lifts on the left of g: whenever src f <= src g and
// dst f <= dst g, also dst f <= src g.
bool lifts(const FiniteLattice& lattice, Pair f, Pair g);

// S^⧄ and ^⧄S.
MorphClass right_complement(const FiniteLattice& lattice, const MorphClass& s);
MorphClass left_complement(const FiniteLattice& lattice, const MorphClass& s);

// A class that has been checked once to be closed under pushouts, so that
// lifting against it reduces to the absence of proper factorizations.
class PushoutClosedClass {
 public:
  // Throws NotPushoutClosed with the first failing (a, b, c).
  PushoutClosedClass(const FiniteLattice& lattice, MorphClass j);
  const MorphClass& get() const noexcept { return class_; }

 private:
  MorphClass class_;
};

// Every c != src f with (src f, c) in j and c <= dst f, ascending.
std::vector<Element> proper_factorizations(const FiniteLattice& lattice, const MorphClass& j, Pair f);
std::vector<Element> proper_factorizations(const FiniteLattice& lattice, const PushoutClosedClass& j, Pair f);

// Closure tests. The witness of a failure is the least offending input:
// (a, b, c) for pushouts along a <= c, pullbacks along c <= b and
// compositions a <= b <= c; (a, b, c, d) for binary (co)products.
Check is_pushout_closed(const FiniteLattice& lattice, const MorphClass& s);
Check is_pullback_closed(const FiniteLattice& lattice, const MorphClass& s);
Check is_composition_closed(const FiniteLattice& lattice, const MorphClass& s);
Check is_binary_coproduct_closed(const FiniteLattice& lattice, const MorphClass& s);
Check is_binary_product_closed(const FiniteLattice& lattice, const MorphClass& s);
// Contains all identities and is closed under composition.
Check is_subcategory(const FiniteLattice& lattice, const MorphClass& s);

// Checks "lifting" (L ⧄ R), "left_maximal" (^⧄R ⊆ L) and
// "right_maximal" (L^⧄ ⊆ R).
Report is_mls(const FiniteLattice& lattice, const MorphClass& left, const MorphClass& right);
// is_mls plus "factorization": every morphism factors left-then-right.
Report is_wfs(const FiniteLattice& lattice, const MorphClass& left, const MorphClass& right);

// All m with (src f, m) in left and (m, dst f) in right, ascending.
std::vector<Element> factorize(const FiniteLattice& lattice, const MorphClass& left, const MorphClass& right,
                               Pair f);
// The least such m; throws NoFactorization when there is none.
Element factorize_one(const FiniteLattice& lattice, const MorphClass& left, const MorphClass& right, Pair f);

}  // namespace posetmc
