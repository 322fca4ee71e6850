#include "posetmc/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <vector>

#ifdef POSETMC_HAVE_OPENMP
#include <omp.h>
#endif

namespace posetmc::kernels {

namespace {

// f = (a, b) lifts against g = (x, y) iff every square a <= x, b <= y has
// the diagonal b <= x.
bool lifts(const FiniteLattice& l, Element a, Element b, Element x, Element y) {
  return !(l.leq(a, x) && l.leq(b, y)) || l.leq(b, x);
}

bool any_and(const std::uint64_t* p, const std::uint64_t* q, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (p[w] & q[w]) return true;
  return false;
}

template <class Witness>
std::optional<Witness> least(const std::vector<std::optional<Witness>>& per_row) {
  for (const auto& w : per_row)
    if (w) return w;
  return std::nullopt;
}

// Least row with a failure so far; rows above it need not be scanned.
class RowBound {
 public:
  explicit RowBound(std::size_t n) : least_(n) {}
  bool above(std::size_t row) const { return row > least_.load(std::memory_order_relaxed); }
  void found(std::size_t row) {
    std::size_t cur = least_.load(std::memory_order_relaxed);
    while (row < cur && !least_.compare_exchange_weak(cur, row, std::memory_order_relaxed)) {
    }
  }

 private:
  std::atomic<std::size_t> least_;
};

}  // namespace

namespace reference {

MorphClass right_complement(const FiniteLattice& l, const MorphClass& s) {
  MorphClass out(l.size());
  const auto members = s.pairs();
  for (const Pair& g : l.comparable_pairs()) {
    bool ok = true;
    for (const Pair& f : members)
      if (!lifts(l, f.src, f.dst, g.src, g.dst)) { ok = false; break; }
    if (ok) out.insert(g);
  }
  return out;
}

MorphClass left_complement(const FiniteLattice& l, const MorphClass& s) {
  MorphClass out(l.size());
  const auto members = s.pairs();
  for (const Pair& f : l.comparable_pairs()) {
    bool ok = true;
    for (const Pair& g : members)
      if (!lifts(l, f.src, f.dst, g.src, g.dst)) { ok = false; break; }
    if (ok) out.insert(f);
  }
  return out;
}

std::optional<LiftFailure> first_lift_failure(const FiniteLattice& l, const MorphClass& left,
                                              const MorphClass& right) {
  const auto rs = right.pairs();
  for (const Pair& f : left.pairs())
    for (const Pair& g : rs)
      if (!lifts(l, f.src, f.dst, g.src, g.dst)) return LiftFailure{f.src, f.dst, g.src, g.dst};
  return std::nullopt;
}

std::optional<TwoOfThreeFailure> first_two_of_three_failure(const FiniteLattice& l, const MorphClass& we) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!l.leq(b, c)) continue;
        const int k = int(we.contains(a, b)) + int(we.contains(b, c)) + int(we.contains(a, c));
        if (k == 2) return TwoOfThreeFailure{a, b, c};
      }
    }
  return std::nullopt;
}

}  // namespace reference

namespace parallel {

// g = (x, y) fails iff some (a, b) in s has a <= x and b in down(y) \ down(x).
MorphClass right_complement(const FiniteLattice& l, const MorphClass& s) {
  const std::size_t n = l.size();
  const std::size_t words = s.bits().words_per_row();
  MorphClass out(n);
  const BitMatrix& down = l.down_sets();
#pragma omp parallel
  {
    std::vector<std::uint64_t> mask(words);
#pragma omp for schedule(dynamic, 4)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!l.leq(static_cast<Element>(x), static_cast<Element>(y))) continue;
        for (std::size_t w = 0; w < words; ++w) mask[w] = down.row(y)[w] & ~down.row(x)[w];
        bool ok = true;
        const std::uint64_t* dx = down.row(x);
        for (std::size_t w = 0; w < words && ok; ++w) {
          std::uint64_t word = dx[w];
          while (word) {
            const std::size_t a = w * 64 + std::countr_zero(word);
            if (any_and(s.bits().row(a), mask.data(), words)) { ok = false; break; }
            word &= word - 1;
          }
        }
        if (ok) out.bits().set(x, y);
      }
    }
  }
  return out;
}

// f = (a, b) fails iff some (x, y) in s has x in up(a) \ up(b) and y in up(b).
MorphClass left_complement(const FiniteLattice& l, const MorphClass& s) {
  const std::size_t n = l.size();
  const std::size_t words = s.bits().words_per_row();
  MorphClass out(n);
  const BitMatrix& up = l.up_sets();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!l.leq(static_cast<Element>(a), static_cast<Element>(b))) continue;
      bool ok = true;
      for (std::size_t w = 0; w < words && ok; ++w) {
        std::uint64_t word = up.row(a)[w] & ~up.row(b)[w];
        while (word) {
          const std::size_t x = w * 64 + std::countr_zero(word);
          if (any_and(s.bits().row(x), up.row(b), words)) { ok = false; break; }
          word &= word - 1;
        }
      }
      if (ok) out.bits().set(a, b);
    }
  }
  return out;
}

std::optional<LiftFailure> first_lift_failure(const FiniteLattice& l, const MorphClass& left,
                                              const MorphClass& right) {
  const std::size_t n = l.size();
  const auto rs = right.pairs();
  std::vector<std::optional<LiftFailure>> per_row(n);
  RowBound bound(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t a = 0; a < n; ++a) {
    if (bound.above(a)) continue;
    for (std::size_t b = 0; b < n && !per_row[a]; ++b) {
      if (!left.contains(static_cast<Element>(a), static_cast<Element>(b))) continue;
      for (const Pair& g : rs)
        if (!lifts(l, static_cast<Element>(a), static_cast<Element>(b), g.src, g.dst)) {
          per_row[a] = LiftFailure{static_cast<Element>(a), static_cast<Element>(b), g.src, g.dst};
          bound.found(a);
          break;
        }
    }
  }
  return least(per_row);
}

// For a <= b, a failing c in up(b) lies in W(a) xor W(b) when (a, b) is in
// W, and in W(a) and W(b) otherwise.
std::optional<TwoOfThreeFailure> first_two_of_three_failure(const FiniteLattice& l, const MorphClass& we) {
  const std::size_t n = l.size();
  const std::size_t words = we.bits().words_per_row();
  const BitMatrix& up = l.up_sets();
  std::vector<std::optional<TwoOfThreeFailure>> per_row(n);
  RowBound bound(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t a = 0; a < n; ++a) {
    if (bound.above(a)) continue;
    const std::uint64_t* wa = we.bits().row(a);
    for (std::size_t b = 0; b < n && !per_row[a]; ++b) {
      if (!l.leq(static_cast<Element>(a), static_cast<Element>(b))) continue;
      const std::uint64_t* wb = we.bits().row(b);
      const std::uint64_t* ub = up.row(b);
      const bool ab = we.contains(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t hit = ub[w] & (ab ? wa[w] ^ wb[w] : wa[w] & wb[w]);
        if (hit) {
          per_row[a] = TwoOfThreeFailure{static_cast<Element>(a), static_cast<Element>(b),
                                         static_cast<Element>(w * 64 + std::countr_zero(hit))};
          bound.found(a);
          break;
        }
      }
    }
  }
  return least(per_row);
}

}  // namespace parallel

int max_threads() {
#ifdef POSETMC_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef POSETMC_HAVE_OPENMP
  omp_set_num_threads(std::max(1, n));
#else
  (void)n;
#endif
}

}  // namespace posetmc::kernels
