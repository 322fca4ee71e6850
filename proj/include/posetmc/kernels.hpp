#pragma once

// Hot loops of the library. Each kernel has a straightforward serial
// reference transcription of its definition and a bitset/OpenMP version;
// tests hold them equal and bench/kernel_bench.cpp compares their speed.

#include <array>
#include <optional>

#include "posetmc/lattice.hpp"
#include "posetmc/morph_class.hpp"

namespace posetmc::kernels {

// (f.src, f.dst, g.src, g.dst) of a square with no diagonal.
using LiftFailure = std::array<Element, 4>;
// (a, b, c) with a <= b <= c and exactly two of ab, bc, ac in the class.
using TwoOfThreeFailure = std::array<Element, 3>;

namespace reference {
MorphClass right_complement(const FiniteLattice& lattice, const MorphClass& s);
MorphClass left_complement(const FiniteLattice& lattice, const MorphClass& s);
std::optional<LiftFailure> first_lift_failure(const FiniteLattice& lattice, const MorphClass& left,
                                              const MorphClass& right);
std::optional<TwoOfThreeFailure> first_two_of_three_failure(const FiniteLattice& lattice, const MorphClass& we);
}  // namespace reference

namespace parallel {
MorphClass right_complement(const FiniteLattice& lattice, const MorphClass& s);
MorphClass left_complement(const FiniteLattice& lattice, const MorphClass& s);
std::optional<LiftFailure> first_lift_failure(const FiniteLattice& lattice, const MorphClass& left,
                                              const MorphClass& right);
std::optional<TwoOfThreeFailure> first_two_of_three_failure(const FiniteLattice& lattice, const MorphClass& we);
}  // namespace parallel

// Number of OpenMP threads the parallel kernels use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace posetmc::kernels
