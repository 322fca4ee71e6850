#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "posetmc/centers.hpp"
#include "posetmc/morph_class.hpp"
#include "posetmc/relative.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// A candidate model structure (we, cof, fib) on a finite lattice, where we
// is the weak-equivalence class of `rel`. The verified flag is only ever
// set by verify_model.
class ModelStruct {
 public:
  ModelStruct(std::shared_ptr<const RelStruct> rel, MorphClass cof, MorphClass fib)
      : rel_(std::move(rel)), cof_(std::move(cof)), fib_(std::move(fib)) {}

  const RelStruct& rel() const noexcept { return *rel_; }
  const std::shared_ptr<const RelStruct>& rel_ptr() const noexcept { return rel_; }
  const FiniteLattice& lattice() const noexcept { return rel_->lattice(); }
  const MorphClass& we() const noexcept { return rel_->weq(); }
  const MorphClass& cof() const noexcept { return cof_; }
  const MorphClass& fib() const noexcept { return fib_; }
  MorphClass acyclic_cof() const { return cof_ & we(); }
  MorphClass acyclic_fib() const { return fib_ & we(); }

  bool verified() const noexcept { return verified_; }
  const Report& report() const noexcept { return report_; }

  // Same classes; ignores verification state.
  bool same_classes(const ModelStruct& o) const { return cof_ == o.cof_ && fib_ == o.fib_ && we() == o.we(); }

  friend Report verify_model(ModelStruct& m);

 private:
  std::shared_ptr<const RelStruct> rel_;
  MorphClass cof_;
  MorphClass fib_;
  Report report_;
  bool verified_ = false;
};

// Exhaustively checks the axioms: we/cof/fib are subcategories, 2-of-3 over
// every composable pair, and both (cof, fib∩we) and (cof∩we, fib) are weak
// factorization systems. Records the report on m.
Report verify_model(ModelStruct& m);
// Verifies a copy and returns it.
ModelStruct verified(ModelStruct m);

// fib = W_c^⧄, cof = ^⧄(fib∩we). Throws RecognitionFailed when W fails
// strong 2-of-3 or the W_c / W_f factorization condition.
ModelStruct construct_terminal(std::shared_ptr<const RelStruct> rel);

// fib = (W_c^chi)^⧄, cof = ^⧄(fib∩we). Throws InvalidCenters.
ModelStruct construct_from_centers(std::shared_ptr<const RelStruct> rel, const CenterMap& chi);
// cof = ^⧄Q_chi, fib = (cof∩we)^⧄. Throws InvalidCenters.
ModelStruct construct_from_centers_dual(std::shared_ptr<const RelStruct> rel, const CenterMap& chi);

struct GenMCHypotheses {
  Check cof_right_in_we;   // cof^⧄ ⊆ W
  Check fib_left_in_we;    // ^⧄fib ⊆ W
  bool components_small = true;  // always true for a finite lattice; recorded, not checked
};

// fib = J^⧄, cof = ^⧄(we∩fib). Throws JNotInW, or HypothesisFailed with the
// witness of the first failing hypothesis (message names hypothesis 2 or 3).
ModelStruct construct_genMC(std::shared_ptr<const RelStruct> rel, const MorphClass& j);
GenMCHypotheses genMC_hypotheses(const RelStruct& rel, const MorphClass& j);

// Dual generator: cof = ^⧄Q, fib = (cof∩we)^⧄.
ModelStruct construct_genMC_dual(std::shared_ptr<const RelStruct> rel, const MorphClass& q);

// J = (cof∩we)(m) ∪ J_chi fed to construct_genMC; the identity m -> result is
// left Quillen.
ModelStruct construct_newcofib(const ModelStruct& m, const CenterMap& chi);
// Q = (fib∩we)(m) ∪ Q_chi fed to construct_genMC_dual; the identity
// result -> m is left Quillen.
ModelStruct construct_newfib_dual(const ModelStruct& m, const CenterMap& chi);

// Objects a with (bottom, a) in cof, resp. (a, top) in fib; ascending.
std::vector<Element> cofibrant_objects(const ModelStruct& m);
std::vector<Element> fibrant_objects(const ModelStruct& m);

// chi(a) = the unique cofibrant-fibrant object in a's weak-equivalence
// component.
CenterMap extract_centers(const ModelStruct& m);

enum class Side { Cofibrant, Fibrant };

// Cofibrant replacement: the middle of (bottom, a) = cof then fib∩we.
// Fibrant replacement: the middle of (a, top) = cof∩we then fib.
Element replacement(const ModelStruct& m, Element a, Side side);

// m = dst ∧ (src ∨ chi(src)) for a weak equivalence f. Throws
// NotWeakEquivalence.
Element factor_via_centers(const RelStruct& rel, const CenterMap& chi, Pair f);

// The generating data of a finite structure: all cofibrations and all
// acyclic cofibrations.
std::pair<MorphClass, MorphClass> generating_sets(const ModelStruct& m);

}  // namespace posetmc
