#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "posetmc/fixtures.hpp"
#include "posetmc/kernels.hpp"

namespace {

using namespace posetmc;

// Subsets of a k-element set ordered by inclusion.
FiniteLattice boolean_lattice(int k) {
  std::vector<std::string> names;
  std::vector<Pair> covers;
  for (int s = 0; s < (1 << k); ++s) {
    names.push_back("s" + std::to_string(s));
    for (int b = 0; b < k; ++b)
      if (!(s >> b & 1)) covers.push_back({Element(s), Element(s | 1 << b)});
  }
  return FiniteLattice::build(names, covers);
}

MorphClass random_class(const FiniteLattice& l, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(density);
  MorphClass c = MorphClass::identities(l);
  for (const Pair& p : l.comparable_pairs())
    if (coin(rng)) c.insert(p);
  return c;
}

struct Input {
  std::shared_ptr<const FiniteLattice> lattice;
  MorphClass s;
};

Input input_for(int which) {
  if (which == 0) {
    auto rel = fixture_rel("trunc-4");
    return {rel->lattice_ptr(), rel->weq()};
  }
  auto l = std::make_shared<const FiniteLattice>(boolean_lattice(which));
  return {l, random_class(*l, 0.05, 7)};
}

template <MorphClass (*Kernel)(const FiniteLattice&, const MorphClass&)>
void BM_Complement(benchmark::State& state) {
  const Input in = input_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(*in.lattice, in.s));
  state.counters["elements"] = static_cast<double>(in.lattice->size());
}

// Second argument 1: W = every morphism, so no triple fails and the whole
// scan runs.
template <std::optional<kernels::TwoOfThreeFailure> (*Kernel)(const FiniteLattice&, const MorphClass&)>
void BM_TwoOfThree(benchmark::State& state) {
  Input in = input_for(static_cast<int>(state.range(0)));
  if (state.range(1)) in.s = MorphClass::all(*in.lattice);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(*in.lattice, in.s));
  state.counters["elements"] = static_cast<double>(in.lattice->size());
}

// 0 = trunc-4, k > 0 = Boolean lattice on k atoms.
#define INPUTS Arg(0)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond)
#define TRIPLE_INPUTS ArgsProduct({{0, 5, 6, 7}, {0, 1}})->Unit(benchmark::kMicrosecond)

BENCHMARK(BM_Complement<kernels::reference::right_complement>)->Name("right_complement/serial")->INPUTS;
BENCHMARK(BM_Complement<kernels::parallel::right_complement>)->Name("right_complement/parallel")->INPUTS;
BENCHMARK(BM_Complement<kernels::reference::left_complement>)->Name("left_complement/serial")->INPUTS;
BENCHMARK(BM_Complement<kernels::parallel::left_complement>)->Name("left_complement/parallel")->INPUTS;
BENCHMARK(BM_TwoOfThree<kernels::reference::first_two_of_three_failure>)->Name("two_of_three/serial")->TRIPLE_INPUTS;
BENCHMARK(BM_TwoOfThree<kernels::parallel::first_two_of_three_failure>)->Name("two_of_three/parallel")->TRIPLE_INPUTS;

}  // namespace

BENCHMARK_MAIN();
