#pragma once

#include <memory>
#include <span>
#include <vector>

#include "posetmc/lattice.hpp"
#include "posetmc/morph_class.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

struct RelativeOptions {
  // Complete W with identities instead of rejecting it.
  bool add_identities = false;
};

// A finite lattice together with a validated subcategory W of weak
// equivalences, its zigzag components, and the classes W_c / W_f.
class RelStruct {
 public:
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const FiniteLattice>& lattice_ptr() const noexcept { return lattice_; }
  const MorphClass& weq() const noexcept { return weq_; }
  // Largest subclass of W whose pushouts along any morphism stay in W.
  const MorphClass& wc() const noexcept { return wc_; }
  // Largest subclass of W whose pullbacks along any morphism stay in W.
  const MorphClass& wf() const noexcept { return wf_; }

  // Components are ordered by least element, each listed ascending.
  const std::vector<std::vector<Element>>& components() const noexcept { return components_; }
  std::size_t component_of(Element e) const noexcept { return component_of_[e]; }

  friend RelStruct validate_relative(std::shared_ptr<const FiniteLattice>, std::span<const Pair>,
                                     RelativeOptions);

 private:
  RelStruct() = default;

  std::shared_ptr<const FiniteLattice> lattice_;
  MorphClass weq_;
  MorphClass wc_;
  MorphClass wf_;
  std::vector<std::vector<Element>> components_;
  std::vector<std::size_t> component_of_;
};

// Throws NotComparable, MissingIdentities (unless options.add_identities)
// or NotCompositionClosed with the missing composite (a, c) as witness.
RelStruct validate_relative(std::shared_ptr<const FiniteLattice> lattice, std::span<const Pair> weq,
                            RelativeOptions options = {});

MorphClass compute_Wc(const FiniteLattice& lattice, const MorphClass& weq);
MorphClass compute_Wf(const FiniteLattice& lattice, const MorphClass& weq);
inline const MorphClass& compute_Wc(const RelStruct& r) { return r.wc(); }
inline const MorphClass& compute_Wf(const RelStruct& r) { return r.wf(); }

// Strong 2-of-3: every factor of a W-morphism is in W. Witness (a, b, c).
Check check_s2of3(const FiniteLattice& lattice, const MorphClass& weq);
inline Check check_s2of3(const RelStruct& r) { return check_s2of3(r.lattice(), r.weq()); }

// Every W-morphism factors as W_c then W_f. Witness (a, b).
Check check_cw_factorization(const RelStruct& r);

}  // namespace posetmc
