#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetmc/bit_matrix.hpp"
#include "posetmc/types.hpp"

namespace posetmc {

inline constexpr std::size_t kDefaultMaxElements = 512;

using LabelPair = std::pair<std::string, std::string>;

// A finite bounded lattice viewed as a thin category: there is a morphism
// a -> b iff a <= b. Coproducts and pushouts are joins, products and
// pullbacks are meets, the initial object is bottom and the terminal is top.
//
// Instances are immutable once built.
class FiniteLattice {
 public:
  // Takes the reflexive-transitive closure of `relations` (covers or any
  // order pairs) and validates it. Throws Error with kind DuplicateLabel,
  // UnknownLabel, TooLarge, CycleDetected, Unbounded or NotALattice.
  static FiniteLattice build(std::vector<std::string> names, std::span<const LabelPair> relations,
                             std::size_t max_elements = kDefaultMaxElements);
  static FiniteLattice build(std::vector<std::string> names, std::span<const Pair> relations,
                             std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;  // throws UnknownLabel

  bool leq(Element a, Element b) const noexcept { return up_.test(a, b); }
  bool comparable(Element a, Element b) const noexcept { return leq(a, b) || leq(b, a); }
  bool valid(Pair p) const noexcept { return p.src < size() && p.dst < size() && leq(p.src, p.dst); }

  Element join(Element a, Element b) const noexcept { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const noexcept { return meet_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  // Row a of `up` is the principal filter of a; row a of `down` its ideal.
  const BitMatrix& up_sets() const noexcept { return up_; }
  const BitMatrix& down_sets() const noexcept { return down_; }

  // All a <= b, lexicographically sorted.
  const std::vector<Pair>& comparable_pairs() const noexcept { return pairs_; }
  // Covering pairs of the Hasse diagram, lexicographically sorted.
  std::vector<Pair> covers() const;

  std::string describe(Pair p) const;

 private:
  FiniteLattice() = default;

  std::vector<std::string> names_;
  BitMatrix up_;
  BitMatrix down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Pair> pairs_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Least upper bound of s; bottom for the empty set.
Element join_all(const FiniteLattice& lattice, std::span<const Element> s);
// Greatest lower bound of s; top for the empty set.
Element meet_all(const FiniteLattice& lattice, std::span<const Element> s);

// Cobase change of f = (a, b) along a -> c: the pair (c, b v c).
Pair pushout_of(const FiniteLattice& lattice, Pair f, Element c);
// Base change of f = (a, b) along c -> b: the pair (a ^ c, c).
Pair pullback_of(const FiniteLattice& lattice, Pair f, Element c);

}  // namespace posetmc
