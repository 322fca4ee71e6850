#include "posetmc/recognize.hpp"

#include "posetmc/lifting.hpp"

namespace posetmc {

Report recognition_conditions(const RelStruct& rel) {
  Report r;
  r.add(check_s2of3(rel));
  r.add(check_cw_factorization(rel));
  Check co = is_binary_coproduct_closed(rel.lattice(), rel.wc());
  co.name = "wc_binary_coproduct_closed";
  r.add(std::move(co));
  Check pr = is_binary_product_closed(rel.lattice(), rel.wf());
  pr.name = "wf_binary_product_closed";
  r.add(std::move(pr));
  return r;
}

Recognition recognize_finite(std::shared_ptr<const RelStruct> rel) {
  Recognition out;
  out.report = recognition_conditions(*rel);
  out.yes = out.report.passed();
  if (out.yes) out.terminal = construct_terminal(std::move(rel));
  return out;
}

}  // namespace posetmc
