#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "posetmc/bit_matrix.hpp"
#include "posetmc/lattice.hpp"
#include "posetmc/types.hpp"

namespace posetmc {

// A class of morphisms of a fixed finite lattice, i.e. a set of comparable
// pairs. Only comparable pairs can be members.
class MorphClass {
 public:
  MorphClass() = default;
  explicit MorphClass(std::size_t universe) : bits_(universe) {}

  static MorphClass empty(const FiniteLattice& lattice) { return MorphClass(lattice.size()); }
  static MorphClass identities(const FiniteLattice& lattice);
  static MorphClass all(const FiniteLattice& lattice);
  // Throws NotComparable for any pair that is not a morphism.
  static MorphClass from_pairs(const FiniteLattice& lattice, std::span<const Pair> pairs);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(Pair p) const noexcept { return bits_.test(p.src, p.dst); }
  bool contains(Element a, Element b) const noexcept { return bits_.test(a, b); }
  // Caller guarantees the pair is comparable.
  void insert(Pair p) noexcept { bits_.set(p.src, p.dst); }
  void erase(Pair p) noexcept { bits_.reset(p.src, p.dst); }

  std::size_t count() const noexcept { return bits_.count(); }
  bool contains_identities() const noexcept;
  void add_identities() noexcept;

  std::vector<Pair> pairs() const;               // sorted
  std::vector<Pair> non_identity_pairs() const;  // sorted

  bool subset_of(const MorphClass& o) const noexcept { return bits_.subset_of(o.bits_); }

  MorphClass& operator&=(const MorphClass& o) noexcept { bits_ &= o.bits_; return *this; }
  MorphClass& operator|=(const MorphClass& o) noexcept { bits_ |= o.bits_; return *this; }
  MorphClass& operator-=(const MorphClass& o) noexcept { bits_.subtract(o.bits_); return *this; }
  friend MorphClass operator&(MorphClass a, const MorphClass& b) { return a &= b; }
  friend MorphClass operator|(MorphClass a, const MorphClass& b) { return a |= b; }
  friend MorphClass operator-(MorphClass a, const MorphClass& b) { return a -= b; }

  bool operator==(const MorphClass&) const = default;
  auto operator<=>(const MorphClass& o) const { return bits_ <=> o.bits_; }

  const BitMatrix& bits() const noexcept { return bits_; }
  BitMatrix& bits() noexcept { return bits_; }

 private:
  BitMatrix bits_;
};

}  // namespace posetmc
