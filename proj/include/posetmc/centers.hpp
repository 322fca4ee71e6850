#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posetmc/morph_class.hpp"
#include "posetmc/relative.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// A total map chi on the elements of a lattice. Validity as a choice of
// centers is checked by validate_centers; the type itself does not enforce it.
class CenterMap {
 public:
  CenterMap() = default;
  explicit CenterMap(std::vector<Element> values) : values_(std::move(values)) {}
  static CenterMap identity(std::size_t n);

  Element operator()(Element a) const { return values_.at(a); }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Element>& values() const noexcept { return values_; }

  auto operator<=>(const CenterMap&) const = default;

 private:
  std::vector<Element> values_;
};

inline constexpr std::size_t kDefaultCenterLimit = 1024;

// Checks "total", "monotone", "component_constant", "in_component",
// "square" (the four edges a^chi(a) -> chi(a), a^chi(a) -> a,
// a -> a v chi(a), chi(a) -> a v chi(a) lie in W) and "idempotent".
Report validate_centers(const RelStruct& rel, const CenterMap& chi);

// Lexicographically least valid choice of centers, if one exists.
// Throws S2OF3Failed when W violates strong 2-of-3.
std::optional<CenterMap> find_centers(const RelStruct& rel);

struct CenterEnumeration {
  std::vector<CenterMap> maps;  // lexicographic order
  bool truncated = false;
};
CenterEnumeration enumerate_centers(const RelStruct& rel, std::size_t limit = kDefaultCenterLimit);

// J_chi = {(a,b) in W : b <= chi(b)},  Q_chi = {(a,b) in W : chi(a) <= a}.
MorphClass compute_Jchi(const RelStruct& rel, const CenterMap& chi);
MorphClass compute_Qchi(const RelStruct& rel, const CenterMap& chi);

// W-morphisms all of whose non-degenerate pushouts lie in W \ Q_chi, and
// dually those whose non-degenerate pullbacks lie in W \ J_chi.
MorphClass compute_Wc_chi(const RelStruct& rel, const CenterMap& chi);
MorphClass compute_Wf_chi(const RelStruct& rel, const CenterMap& chi);

// Pointwise meet of two choices of centers; again a choice of centers.
CenterMap product_centers(const RelStruct& rel, const CenterMap& a, const CenterMap& b);

}  // namespace posetmc
