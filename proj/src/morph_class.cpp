#include "posetmc/morph_class.hpp"

#include "posetmc/error.hpp"

namespace posetmc {

MorphClass MorphClass::identities(const FiniteLattice& lattice) {
  MorphClass c(lattice.size());
  c.add_identities();
  return c;
}

MorphClass MorphClass::all(const FiniteLattice& lattice) {
  MorphClass c(lattice.size());
  for (const Pair& p : lattice.comparable_pairs()) c.insert(p);
  return c;
}

MorphClass MorphClass::from_pairs(const FiniteLattice& lattice, std::span<const Pair> pairs) {
  MorphClass c(lattice.size());
  for (const Pair& p : pairs) {
    if (!lattice.valid(p)) {
      if (p.src < lattice.size() && p.dst < lattice.size())
        throw Error(ErrorKind::NotComparable, "pair " + lattice.describe(p) + " is not a morphism",
                    {p.src, p.dst});
      throw Error(ErrorKind::UnknownLabel, "pair references an element outside the lattice");
    }
    c.insert(p);
  }
  return c;
}

bool MorphClass::contains_identities() const noexcept {
  for (std::size_t a = 0; a < universe(); ++a)
    if (!bits_.test(a, a)) return false;
  return true;
}

void MorphClass::add_identities() noexcept {
  for (std::size_t a = 0; a < universe(); ++a) bits_.set(a, a);
}

std::vector<Pair> MorphClass::pairs() const {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < universe(); ++a) {
    const std::uint64_t* row = bits_.row(a);
    for (std::size_t w = 0; w < bits_.words_per_row(); ++w) {
      std::uint64_t word = row[w];
      while (word) {
        out.push_back({static_cast<Element>(a), static_cast<Element>(w * 64 + std::countr_zero(word))});
        word &= word - 1;
      }
    }
  }
  return out;
}

std::vector<Pair> MorphClass::non_identity_pairs() const {
  std::vector<Pair> out = pairs();
  std::erase_if(out, [](const Pair& p) { return p.is_identity(); });
  return out;
}

}  // namespace posetmc
