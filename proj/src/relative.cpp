#include "posetmc/relative.hpp"

#include <algorithm>
#include <numeric>

#include "posetmc/error.hpp"
#include "posetmc/lifting.hpp"

namespace posetmc {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

RelStruct validate_relative(std::shared_ptr<const FiniteLattice> lattice, std::span<const Pair> weq,
                            RelativeOptions options) {
  const FiniteLattice& l = *lattice;
  MorphClass w = MorphClass::from_pairs(l, weq);
  if (options.add_identities) {
    w.add_identities();
  } else {
    for (Element a = 0; a < l.size(); ++a)
      if (!w.contains(a, a))
        throw Error(ErrorKind::MissingIdentities, "weak equivalences lack the identity on '" + l.name(a) + "'",
                    {a, a});
  }
  if (Check c = is_composition_closed(l, w); !c.passed) {
    const Element a = c.witness[0], b = c.witness[1], cc = c.witness[2];
    throw Error(ErrorKind::NotCompositionClosed,
                "weak equivalences contain " + l.describe({a, b}) + " and " + l.describe({b, cc}) + " but not " +
                    l.describe({a, cc}),
                {a, cc});
  }

  RelStruct r;
  r.lattice_ = std::move(lattice);
  r.weq_ = std::move(w);
  r.wc_ = compute_Wc(l, r.weq_);
  r.wf_ = compute_Wf(l, r.weq_);

  DisjointSets sets(l.size());
  for (const Pair& p : r.weq_.pairs()) sets.unite(p.src, p.dst);
  r.component_of_.assign(l.size(), 0);
  std::vector<std::size_t> slot(l.size(), SIZE_MAX);
  for (Element a = 0; a < l.size(); ++a) {
    const std::size_t root = sets.root(a);
    if (slot[root] == SIZE_MAX) {
      slot[root] = r.components_.size();
      r.components_.emplace_back();
    }
    r.component_of_[a] = slot[root];
    r.components_[slot[root]].push_back(a);
  }
  return r;
}

MorphClass compute_Wc(const FiniteLattice& l, const MorphClass& weq) {
  MorphClass out(l.size());
  for (const Pair& f : weq.pairs()) {
    bool ok = true;
    for (Element c = 0; c < l.size() && ok; ++c)
      if (l.leq(f.src, c)) ok = weq.contains(c, l.join(f.dst, c));
    if (ok) out.insert(f);
  }
  return out;
}

MorphClass compute_Wf(const FiniteLattice& l, const MorphClass& weq) {
  MorphClass out(l.size());
  for (const Pair& f : weq.pairs()) {
    bool ok = true;
    for (Element c = 0; c < l.size() && ok; ++c)
      if (l.leq(c, f.dst)) ok = weq.contains(l.meet(f.src, c), c);
    if (ok) out.insert(f);
  }
  return out;
}

Check check_s2of3(const FiniteLattice& l, const MorphClass& weq) {
  // Least (a, b, c) by scanning a, then b, then c.
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      if (!l.leq(a, b)) continue;
      for (Element c = 0; c < l.size(); ++c)
        if (l.leq(b, c) && weq.contains(a, c) && !(weq.contains(a, b) && weq.contains(b, c)))
          return {"s2of3", false, {a, b, c}, "a W-morphism has a factor outside W"};
    }
  return {"s2of3", true, {}, {}};
}

Check check_cw_factorization(const RelStruct& r) {
  const FiniteLattice& l = r.lattice();
  for (const Pair& f : r.weq().pairs()) {
    bool found = false;
    for (Element m = 0; m < l.size() && !found; ++m)
      found = r.wc().contains(f.src, m) && r.wf().contains(m, f.dst);
    if (!found) return {"cw_factorization", false, {f.src, f.dst}, "no W_c-then-W_f factorization"};
  }
  return {"cw_factorization", true, {}, {}};
}

}  // namespace posetmc
