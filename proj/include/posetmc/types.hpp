#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace posetmc {

// Index of an object of a finite lattice.
using Element = std::uint32_t;

// A morphism src -> dst, which exists exactly when src <= dst.
struct Pair {
  Element src = 0;
  Element dst = 0;

  bool is_identity() const noexcept { return src == dst; }
  auto operator<=>(const Pair&) const = default;
};

}  // namespace posetmc
