#include "posetmc/centers.hpp"

#include <cassert>
#include <stdexcept>

#include "posetmc/error.hpp"

namespace posetmc {

CenterMap CenterMap::identity(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(i);
  return CenterMap(std::move(v));
}

namespace {

bool square_in_weq(const RelStruct& rel, Element a, Element c) {
  const FiniteLattice& l = rel.lattice();
  const MorphClass& w = rel.weq();
  const Element lo = l.meet(a, c);
  const Element hi = l.join(a, c);
  return w.contains(lo, c) && w.contains(lo, a) && w.contains(a, hi) && w.contains(c, hi);
}

// Candidate centers of each component, and the order between components.
struct SearchSpace {
  std::vector<std::vector<Element>> candidates;
  // below[k] lists components j < k with some element of j <= some element of k;
  // above[k] lists components j < k with some element of k <= some element of j.
  std::vector<std::vector<std::size_t>> below;
  std::vector<std::vector<std::size_t>> above;
};

SearchSpace search_space(const RelStruct& rel) {
  const FiniteLattice& l = rel.lattice();
  const auto& comps = rel.components();
  SearchSpace s;
  s.candidates.resize(comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (Element c : comps[k]) {
      bool ok = true;
      for (Element a : comps[k])
        if (!square_in_weq(rel, a, c)) { ok = false; break; }
      if (ok) s.candidates[k].push_back(c);
    }
  s.below.resize(comps.size());
  s.above.resize(comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      bool jk = false, kj = false;
      for (Element a : comps[j])
        for (Element b : comps[k]) {
          jk = jk || l.leq(a, b);
          kj = kj || l.leq(b, a);
        }
      if (jk) s.below[k].push_back(j);
      if (kj) s.above[k].push_back(j);
    }
  return s;
}

// Depth-first search over components in order of their least element, so
// that the first complete assignment is the lexicographically least map.
class CenterSearch {
 public:
  CenterSearch(const RelStruct& rel, std::size_t limit)
      : rel_(rel), space_(search_space(rel)), limit_(limit), chosen_(rel.components().size()) {}

  CenterEnumeration run() {
    descend(0);
    return std::move(result_);
  }

 private:
  bool descend(std::size_t k) {
    const auto& comps = rel_.components();
    if (k == comps.size()) {
      if (result_.maps.size() == limit_) {
        result_.truncated = true;
        return false;
      }
      std::vector<Element> values(rel_.lattice().size());
      for (std::size_t j = 0; j < comps.size(); ++j)
        for (Element a : comps[j]) values[a] = chosen_[j];
      result_.maps.emplace_back(std::move(values));
      return true;
    }
    const FiniteLattice& l = rel_.lattice();
    for (Element c : space_.candidates[k]) {
      bool ok = true;
      for (std::size_t j : space_.below[k]) ok = ok && l.leq(chosen_[j], c);
      for (std::size_t j : space_.above[k]) ok = ok && l.leq(c, chosen_[j]);
      if (!ok) continue;
      chosen_[k] = c;
      if (!descend(k + 1)) return false;
    }
    return true;
  }

  const RelStruct& rel_;
  SearchSpace space_;
  std::size_t limit_;
  std::vector<Element> chosen_;
  CenterEnumeration result_;
};

void require_s2of3(const RelStruct& rel) {
  Check c = check_s2of3(rel);
  if (!c.passed) throw Error(ErrorKind::S2OF3Failed, "weak equivalences violate strong 2-of-3", c.witness);
}

}  // namespace

Report validate_centers(const RelStruct& rel, const CenterMap& chi) {
  const FiniteLattice& l = rel.lattice();
  const auto n = static_cast<Element>(l.size());
  Report r;
  if (chi.size() != n) {
    r.fail("total", {}, "map has " + std::to_string(chi.size()) + " entries for " + std::to_string(n) + " elements");
    return r;
  }
  for (Element a = 0; a < n; ++a)
    if (chi(a) >= n) {
      r.fail("total", {a}, "value out of range");
      return r;
    }
  r.pass("total");

  auto scan = [&](const char* name, auto&& bad) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (bad(a, b)) {
          r.fail(name, {a, b});
          return;
        }
    r.pass(name);
  };
  scan("monotone", [&](Element a, Element b) { return l.leq(a, b) && !l.leq(chi(a), chi(b)); });
  scan("component_constant", [&](Element a, Element b) { return rel.weq().contains(a, b) && chi(a) != chi(b); });

  auto scan1 = [&](const char* name, auto&& bad) {
    for (Element a = 0; a < n; ++a)
      if (bad(a)) {
        r.fail(name, {a, chi(a)});
        return;
      }
    r.pass(name);
  };
  scan1("in_component", [&](Element a) { return rel.component_of(a) != rel.component_of(chi(a)); });
  scan1("square", [&](Element a) { return !square_in_weq(rel, a, chi(a)); });
  scan1("idempotent", [&](Element a) { return chi(chi(a)) != chi(a); });
  return r;
}

std::optional<CenterMap> find_centers(const RelStruct& rel) {
  require_s2of3(rel);
  CenterEnumeration e = CenterSearch(rel, 1).run();
  if (e.maps.empty()) return std::nullopt;
  return e.maps.front();
}

CenterEnumeration enumerate_centers(const RelStruct& rel, std::size_t limit) {
  require_s2of3(rel);
  if (limit == 0) return {{}, true};
  return CenterSearch(rel, limit).run();
}

MorphClass compute_Jchi(const RelStruct& rel, const CenterMap& chi) {
  MorphClass out(rel.lattice().size());
  for (const Pair& f : rel.weq().pairs())
    if (rel.lattice().leq(f.dst, chi(f.dst))) out.insert(f);
  return out;
}

MorphClass compute_Qchi(const RelStruct& rel, const CenterMap& chi) {
  MorphClass out(rel.lattice().size());
  for (const Pair& f : rel.weq().pairs())
    if (rel.lattice().leq(chi(f.src), f.src)) out.insert(f);
  return out;
}

MorphClass compute_Wc_chi(const RelStruct& rel, const CenterMap& chi) {
  const FiniteLattice& l = rel.lattice();
  const MorphClass q = compute_Qchi(rel, chi);
  MorphClass out(l.size());
  for (const Pair& f : rel.weq().pairs()) {
    bool ok = true;
    for (Element c = 0; c < l.size() && ok; ++c) {
      if (!l.leq(f.src, c)) continue;
      const Element p = l.join(f.dst, c);
      if (p != c) ok = rel.weq().contains(c, p) && !q.contains(c, p);
    }
    if (ok) out.insert(f);
  }
  return out;
}

MorphClass compute_Wf_chi(const RelStruct& rel, const CenterMap& chi) {
  const FiniteLattice& l = rel.lattice();
  const MorphClass j = compute_Jchi(rel, chi);
  MorphClass out(l.size());
  for (const Pair& f : rel.weq().pairs()) {
    bool ok = true;
    for (Element c = 0; c < l.size() && ok; ++c) {
      if (!l.leq(c, f.dst)) continue;
      const Element p = l.meet(f.src, c);
      if (p != c) ok = rel.weq().contains(p, c) && !j.contains(p, c);
    }
    if (ok) out.insert(f);
  }
  return out;
}

CenterMap product_centers(const RelStruct& rel, const CenterMap& a, const CenterMap& b) {
  const FiniteLattice& l = rel.lattice();
  std::vector<Element> v(l.size());
  for (Element e = 0; e < l.size(); ++e) v[e] = l.meet(a(e), b(e));
  CenterMap out(std::move(v));
  if (!validate_centers(rel, out).passed())
    throw std::logic_error("product of two choices of centers failed validation");
  return out;
}

}  // namespace posetmc
