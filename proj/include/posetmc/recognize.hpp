#pragma once

#include <memory>
#include <optional>

#include "posetmc/model.hpp"
#include "posetmc/relative.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

// Conditions of the finite recognition theorem: "s2of3", "cw_factorization",
// plus the sanity checks "wc_binary_coproduct_closed" and
// "wf_binary_product_closed" that hold automatically on finite lattices.
Report recognition_conditions(const RelStruct& rel);

struct Recognition {
  bool yes = false;
  Report report;
  std::optional<ModelStruct> terminal;  // set iff yes
};

// Decides whether a model structure with weak equivalences W exists and,
// if so, attaches the terminal one.
Recognition recognize_finite(std::shared_ptr<const RelStruct> rel);

}  // namespace posetmc
