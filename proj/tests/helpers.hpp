#pragma once

#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "posetmc/fixtures.hpp"
#include "posetmc/lattice.hpp"
#include "posetmc/model.hpp"
#include "posetmc/morph_class.hpp"
#include "posetmc/relative.hpp"

namespace posetmc::testing {

using Labels = std::initializer_list<std::pair<const char*, const char*>>;

inline Element el(const FiniteLattice& l, const std::string& name) { return l.index_of(name); }

inline Pair pr(const FiniteLattice& l, const std::string& a, const std::string& b) {
  return {l.index_of(a), l.index_of(b)};
}

// Identities plus the listed morphisms.
inline MorphClass cls(const FiniteLattice& l, Labels pairs) {
  MorphClass c = MorphClass::identities(l);
  for (const auto& [a, b] : pairs) c.insert(pr(l, a, b));
  return c;
}

inline std::vector<Pair> pairs_of(const FiniteLattice& l, Labels pairs) {
  std::vector<Pair> out;
  for (const auto& [a, b] : pairs) out.push_back(pr(l, a, b));
  return out;
}

inline std::vector<Element> elems(const FiniteLattice& l, std::initializer_list<const char*> names) {
  std::vector<Element> out;
  for (const char* n : names) out.push_back(l.index_of(n));
  return out;
}

inline std::shared_ptr<const RelStruct> make_rel(std::vector<std::string> names, std::vector<LabelPair> leq,
                                                 std::vector<LabelPair> weq) {
  InstanceFile f{std::move(names), std::move(leq), std::move(weq), true};
  return build_instance(f);
}

// Non-identity (cof∩we, fib∩we) of a structure.
struct Signature {
  std::vector<Pair> acyclic_cof;
  std::vector<Pair> acyclic_fib;
  bool operator==(const Signature&) const = default;
};

inline Signature signature(const ModelStruct& m) {
  return {m.acyclic_cof().non_identity_pairs(), m.acyclic_fib().non_identity_pairs()};
}

inline Signature signature(const FiniteLattice& l, Labels acof, Labels afib) {
  auto sorted = [](std::vector<Pair> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return {sorted(pairs_of(l, acof)), sorted(pairs_of(l, afib))};
}

// The two structures drawn for the two-structures fixture.
inline Signature left_printed(const FiniteLattice& l) {
  return signature(l, {{"A", "B"}, {"A", "B'"}, {"A", "C"}, {"B", "C"}, {"B'", "C"}}, {});
}
inline Signature right_printed(const FiniteLattice& l) {
  return signature(l, {{"A", "C"}, {"B", "C"}, {"B'", "C"}}, {{"A", "B"}, {"A", "B'"}});
}

// A strong 2-of-3 instance with no model structure: e0 -> e6 has no
// factorization through W_c then W_f.
inline std::shared_ptr<const RelStruct> cw_fail() {
  return make_rel({"e0", "e1", "e2", "e3", "e4", "e5", "e6"},
                  {{"e0", "e5"}, {"e0", "e6"}, {"e2", "e6"}, {"e3", "e0"}, {"e3", "e2"}, {"e3", "e4"},
                   {"e4", "e1"}, {"e5", "e1"}, {"e6", "e1"}},
                  {{"e0", "e5"}, {"e0", "e6"}, {"e2", "e6"}});
}

inline MorphClass random_class(const FiniteLattice& l, std::mt19937_64& rng, double density, bool identities) {
  std::bernoulli_distribution coin(density);
  MorphClass c(l.size());
  for (const Pair& p : l.comparable_pairs())
    if ((identities && p.is_identity()) || coin(rng)) c.insert(p);
  return c;
}

}  // namespace posetmc::testing
