#include "posetmc/lifting.hpp"

#include "posetmc/error.hpp"
#include "posetmc/kernels.hpp"

namespace posetmc {

bool lifts(const FiniteLattice& l, Pair f, Pair g) {
  return !(l.leq(f.src, g.src) && l.leq(f.dst, g.dst)) || l.leq(f.dst, g.src);
}

MorphClass right_complement(const FiniteLattice& l, const MorphClass& s) {
  return kernels::parallel::right_complement(l, s);
}

MorphClass left_complement(const FiniteLattice& l, const MorphClass& s) {
  return kernels::parallel::left_complement(l, s);
}

PushoutClosedClass::PushoutClosedClass(const FiniteLattice& l, MorphClass j) : class_(std::move(j)) {
  Check c = is_pushout_closed(l, class_);
  if (!c.passed) throw Error(ErrorKind::NotPushoutClosed, "class is not closed under pushouts", c.witness);
}

std::vector<Element> proper_factorizations(const FiniteLattice& l, const MorphClass& j, Pair f) {
  std::vector<Element> out;
  for (Element c = 0; c < l.size(); ++c)
    if (c != f.src && l.leq(c, f.dst) && j.contains(f.src, c)) out.push_back(c);
  return out;
}

std::vector<Element> proper_factorizations(const FiniteLattice& l, const PushoutClosedClass& j, Pair f) {
  return proper_factorizations(l, j.get(), f);
}

namespace {

Check make_check(std::string name, std::optional<std::vector<Element>> witness, std::string detail = {}) {
  if (!witness) return {std::move(name), true, {}, {}};
  return {std::move(name), false, std::move(*witness), std::move(detail)};
}

std::optional<std::vector<Element>> first_missing_factorization(const FiniteLattice& l, const MorphClass& left,
                                                                const MorphClass& right) {
  for (const Pair& f : l.comparable_pairs()) {
    bool found = false;
    for (Element m = 0; m < l.size() && !found; ++m)
      found = left.contains(f.src, m) && right.contains(m, f.dst);
    if (!found) return std::vector<Element>{f.src, f.dst};
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> first_outside(const MorphClass& s, const MorphClass& bound) {
  for (const Pair& p : (s - bound).pairs()) return std::vector<Element>{p.src, p.dst};
  return std::nullopt;
}

}  // namespace

Check is_pushout_closed(const FiniteLattice& l, const MorphClass& s) {
  for (const Pair& f : s.pairs())
    for (Element c = 0; c < l.size(); ++c)
      if (l.leq(f.src, c) && !s.contains(c, l.join(f.dst, c)))
        return make_check("pushout_closed", std::vector<Element>{f.src, f.dst, c});
  return make_check("pushout_closed", std::nullopt);
}

Check is_pullback_closed(const FiniteLattice& l, const MorphClass& s) {
  for (const Pair& f : s.pairs())
    for (Element c = 0; c < l.size(); ++c)
      if (l.leq(c, f.dst) && !s.contains(l.meet(f.src, c), c))
        return make_check("pullback_closed", std::vector<Element>{f.src, f.dst, c});
  return make_check("pullback_closed", std::nullopt);
}

Check is_composition_closed(const FiniteLattice& l, const MorphClass& s) {
  for (const Pair& f : s.pairs())
    for (Element c = 0; c < l.size(); ++c)
      if (s.contains(f.dst, c) && !s.contains(f.src, c))
        return make_check("composition_closed", std::vector<Element>{f.src, f.dst, c});
  return make_check("composition_closed", std::nullopt);
}

Check is_binary_coproduct_closed(const FiniteLattice& l, const MorphClass& s) {
  const auto ps = s.pairs();
  for (const Pair& f : ps)
    for (const Pair& g : ps)
      if (!s.contains(l.join(f.src, g.src), l.join(f.dst, g.dst)))
        return make_check("binary_coproduct_closed", std::vector<Element>{f.src, f.dst, g.src, g.dst});
  return make_check("binary_coproduct_closed", std::nullopt);
}

Check is_binary_product_closed(const FiniteLattice& l, const MorphClass& s) {
  const auto ps = s.pairs();
  for (const Pair& f : ps)
    for (const Pair& g : ps)
      if (!s.contains(l.meet(f.src, g.src), l.meet(f.dst, g.dst)))
        return make_check("binary_product_closed", std::vector<Element>{f.src, f.dst, g.src, g.dst});
  return make_check("binary_product_closed", std::nullopt);
}

Check is_subcategory(const FiniteLattice& l, const MorphClass& s) {
  for (Element a = 0; a < l.size(); ++a)
    if (!s.contains(a, a)) return make_check("subcategory", std::vector<Element>{a, a}, "missing identity");
  Check c = is_composition_closed(l, s);
  c.name = "subcategory";
  if (!c.passed) c.detail = "missing composite";
  return c;
}

Report is_mls(const FiniteLattice& l, const MorphClass& left, const MorphClass& right) {
  Report r;
  if (auto w = kernels::parallel::first_lift_failure(l, left, right))
    r.fail("lifting", {(*w)[0], (*w)[1], (*w)[2], (*w)[3]});
  else
    r.pass("lifting");
  r.add(make_check("left_maximal", first_outside(left_complement(l, right), left)));
  r.add(make_check("right_maximal", first_outside(right_complement(l, left), right)));
  return r;
}

Report is_wfs(const FiniteLattice& l, const MorphClass& left, const MorphClass& right) {
  Report r = is_mls(l, left, right);
  r.add(make_check("factorization", first_missing_factorization(l, left, right)));
  return r;
}

std::vector<Element> factorize(const FiniteLattice& l, const MorphClass& left, const MorphClass& right, Pair f) {
  std::vector<Element> out;
  for (Element m = 0; m < l.size(); ++m)
    if (left.contains(f.src, m) && right.contains(m, f.dst)) out.push_back(m);
  return out;
}

Element factorize_one(const FiniteLattice& l, const MorphClass& left, const MorphClass& right, Pair f) {
  auto ms = factorize(l, left, right, f);
  if (ms.empty())
    throw Error(ErrorKind::NoFactorization, "no factorization of " + l.describe(f), {f.src, f.dst});
  return ms.front();
}

}  // namespace posetmc
