#include "posetmc/model.hpp"

#include <stdexcept>

#include "posetmc/error.hpp"
#include "posetmc/kernels.hpp"
#include "posetmc/lifting.hpp"
#include "posetmc/recognize.hpp"

namespace posetmc {

Report verify_model(ModelStruct& m) {
  const FiniteLattice& l = m.lattice();
  Report r;
  for (auto [name, cls] : {std::pair{"we", &m.we()}, std::pair{"cof", &m.cof()}, std::pair{"fib", &m.fib()}}) {
    Check c = is_subcategory(l, *cls);
    c.name = std::string(name) + "_subcategory";
    r.add(std::move(c));
  }
  if (auto w = kernels::parallel::first_two_of_three_failure(l, m.we()))
    r.fail("two_of_three", {(*w)[0], (*w)[1], (*w)[2]});
  else
    r.pass("two_of_three");
  r.merge("wfs_cof_afib", is_wfs(l, m.cof(), m.acyclic_fib()));
  r.merge("wfs_acof_fib", is_wfs(l, m.acyclic_cof(), m.fib()));
  m.report_ = r;
  m.verified_ = r.passed();
  return r;
}

ModelStruct verified(ModelStruct m) {
  verify_model(m);
  return m;
}

namespace {

ModelStruct from_fibrations(std::shared_ptr<const RelStruct> rel, MorphClass fib) {
  const FiniteLattice& l = rel->lattice();
  MorphClass cof = left_complement(l, fib & rel->weq());
  return verified(ModelStruct(std::move(rel), std::move(cof), std::move(fib)));
}

ModelStruct from_cofibrations(std::shared_ptr<const RelStruct> rel, MorphClass cof) {
  const FiniteLattice& l = rel->lattice();
  MorphClass fib = right_complement(l, cof & rel->weq());
  return verified(ModelStruct(std::move(rel), std::move(cof), std::move(fib)));
}

void require_centers(const RelStruct& rel, const CenterMap& chi) {
  Report r = validate_centers(rel, chi);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::InvalidCenters, "not a choice of centers: " + c->name + " fails", c->witness);
}

}  // namespace

ModelStruct construct_terminal(std::shared_ptr<const RelStruct> rel) {
  Report conditions = recognition_conditions(*rel);
  if (const Check* c = conditions.first_failure())
    throw Error(ErrorKind::RecognitionFailed, "no model structure exists: " + c->name + " fails", c->witness);
  MorphClass fib = right_complement(rel->lattice(), rel->wc());
  return from_fibrations(std::move(rel), std::move(fib));
}

ModelStruct construct_from_centers(std::shared_ptr<const RelStruct> rel, const CenterMap& chi) {
  require_centers(*rel, chi);
  MorphClass fib = right_complement(rel->lattice(), compute_Wc_chi(*rel, chi));
  return from_fibrations(std::move(rel), std::move(fib));
}

ModelStruct construct_from_centers_dual(std::shared_ptr<const RelStruct> rel, const CenterMap& chi) {
  require_centers(*rel, chi);
  MorphClass cof = left_complement(rel->lattice(), compute_Qchi(*rel, chi));
  return from_cofibrations(std::move(rel), std::move(cof));
}

GenMCHypotheses genMC_hypotheses(const RelStruct& rel, const MorphClass& j) {
  const FiniteLattice& l = rel.lattice();
  const MorphClass fib = right_complement(l, j);
  const MorphClass cof = left_complement(l, fib & rel.weq());
  GenMCHypotheses h;
  auto contained = [&](const char* name, const MorphClass& s) {
    for (const Pair& p : (s - rel.weq()).pairs()) return Check{name, false, {p.src, p.dst}, {}};
    return Check{name, true, {}, {}};
  };
  h.cof_right_in_we = contained("cof_right_in_we", right_complement(l, cof));
  h.fib_left_in_we = contained("fib_left_in_we", left_complement(l, fib));
  return h;
}

ModelStruct construct_genMC(std::shared_ptr<const RelStruct> rel, const MorphClass& j) {
  if (!j.subset_of(rel->weq())) {
    const Pair p = (j - rel->weq()).pairs().front();
    throw Error(ErrorKind::JNotInW, "generating class contains " + rel->lattice().describe(p) + " outside W",
                {p.src, p.dst});
  }
  GenMCHypotheses h = genMC_hypotheses(*rel, j);
  if (!h.cof_right_in_we.passed)
    throw Error(ErrorKind::HypothesisFailed, "hypothesis 2 fails: cof^⧄ is not contained in W",
                h.cof_right_in_we.witness);
  if (!h.fib_left_in_we.passed)
    throw Error(ErrorKind::HypothesisFailed, "hypothesis 3 fails: ^⧄fib is not contained in W",
                h.fib_left_in_we.witness);
  MorphClass fib = right_complement(rel->lattice(), j);
  return from_fibrations(std::move(rel), std::move(fib));
}

ModelStruct construct_genMC_dual(std::shared_ptr<const RelStruct> rel, const MorphClass& q) {
  if (!q.subset_of(rel->weq())) {
    const Pair p = (q - rel->weq()).pairs().front();
    throw Error(ErrorKind::JNotInW, "generating class contains " + rel->lattice().describe(p) + " outside W",
                {p.src, p.dst});
  }
  const FiniteLattice& l = rel->lattice();
  MorphClass cof = left_complement(l, q);
  MorphClass fib = right_complement(l, cof & rel->weq());
  auto outside = [&](const MorphClass& s) { return s - rel->weq(); };
  if (auto bad = outside(left_complement(l, fib)).pairs(); !bad.empty())
    throw Error(ErrorKind::HypothesisFailed, "hypothesis 2 fails: ^⧄fib is not contained in W",
                {bad.front().src, bad.front().dst});
  if (auto bad = outside(right_complement(l, cof)).pairs(); !bad.empty())
    throw Error(ErrorKind::HypothesisFailed, "hypothesis 3 fails: cof^⧄ is not contained in W",
                {bad.front().src, bad.front().dst});
  return verified(ModelStruct(std::move(rel), std::move(cof), std::move(fib)));
}

ModelStruct construct_newcofib(const ModelStruct& m, const CenterMap& chi) {
  require_centers(m.rel(), chi);
  MorphClass j = m.acyclic_cof() | compute_Jchi(m.rel(), chi);
  ModelStruct out = construct_genMC(m.rel_ptr(), j);
  if (!m.cof().subset_of(out.cof())) throw std::logic_error("identity is not left Quillen into the new structure");
  return out;
}

ModelStruct construct_newfib_dual(const ModelStruct& m, const CenterMap& chi) {
  require_centers(m.rel(), chi);
  MorphClass q = m.acyclic_fib() | compute_Qchi(m.rel(), chi);
  ModelStruct out = construct_genMC_dual(m.rel_ptr(), q);
  if (!out.cof().subset_of(m.cof())) throw std::logic_error("identity is not left Quillen out of the new structure");
  return out;
}

std::vector<Element> cofibrant_objects(const ModelStruct& m) {
  std::vector<Element> out;
  const FiniteLattice& l = m.lattice();
  for (Element a = 0; a < l.size(); ++a)
    if (m.cof().contains(l.bottom(), a)) out.push_back(a);
  return out;
}

std::vector<Element> fibrant_objects(const ModelStruct& m) {
  std::vector<Element> out;
  const FiniteLattice& l = m.lattice();
  for (Element a = 0; a < l.size(); ++a)
    if (m.fib().contains(a, l.top())) out.push_back(a);
  return out;
}

CenterMap extract_centers(const ModelStruct& m) {
  const FiniteLattice& l = m.lattice();
  const RelStruct& rel = m.rel();
  std::vector<Element> center(rel.components().size(), 0);
  std::vector<int> found(rel.components().size(), 0);
  for (Element a = 0; a < l.size(); ++a)
    if (m.cof().contains(l.bottom(), a) && m.fib().contains(a, l.top())) {
      center[rel.component_of(a)] = a;
      ++found[rel.component_of(a)];
    }
  for (int k : found)
    if (k != 1) throw std::logic_error("a weak-equivalence component lacks a unique cofibrant-fibrant object");
  std::vector<Element> values(l.size());
  for (Element a = 0; a < l.size(); ++a) values[a] = center[rel.component_of(a)];
  CenterMap chi(std::move(values));
  if (!validate_centers(rel, chi).passed()) throw std::logic_error("extracted centers fail validation");
  return chi;
}

Element replacement(const ModelStruct& m, Element a, Side side) {
  const FiniteLattice& l = m.lattice();
  std::vector<Element> middles = side == Side::Cofibrant
                                     ? factorize(l, m.cof(), m.acyclic_fib(), {l.bottom(), a})
                                     : factorize(l, m.acyclic_cof(), m.fib(), {a, l.top()});
  if (middles.size() != 1) throw std::logic_error("replacement is not unique");
  const Element r = middles.front();
  if (m.rel().component_of(r) != m.rel().component_of(a))
    throw std::logic_error("replacement left the weak-equivalence component");
  return r;
}

Element factor_via_centers(const RelStruct& rel, const CenterMap& chi, Pair f) {
  if (!rel.lattice().valid(f) || !rel.weq().contains(f))
    throw Error(ErrorKind::NotWeakEquivalence, "not a weak equivalence", {f.src, f.dst});
  const FiniteLattice& l = rel.lattice();
  return l.meet(f.dst, l.join(f.src, chi(f.src)));
}

std::pair<MorphClass, MorphClass> generating_sets(const ModelStruct& m) {
  const FiniteLattice& l = m.lattice();
  MorphClass i = m.cof();
  MorphClass j = m.acyclic_cof();
  if (right_complement(l, j) != m.fib() || right_complement(l, i) != m.acyclic_fib())
    throw std::logic_error("generating sets do not recover the fibrations");
  return {std::move(i), std::move(j)};
}

}  // namespace posetmc
