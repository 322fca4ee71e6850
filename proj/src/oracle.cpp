#include "posetmc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "posetmc/error.hpp"
#include "posetmc/lifting.hpp"

namespace posetmc {

namespace {

using Mask = std::uint64_t;

// Closure of generator subsets of W under composition and pushouts. A
// closure that leaves W is sent to the full mask, which keeps the map a
// closure operator; such classes are dropped later by verification.
class GeneratorClosure {
 public:
  explicit GeneratorClosure(const RelStruct& rel) : rel_(rel), gens_(rel.weq().non_identity_pairs()) {
    const std::size_t n = rel.lattice().size();
    index_.assign(n * n, -1);
    for (std::size_t i = 0; i < gens_.size(); ++i) index_[gens_[i].src * n + gens_[i].dst] = static_cast<int>(i);
    full_ = gens_.size() == 64 ? ~Mask{0} : (Mask{1} << gens_.size()) - 1;
  }

  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<Pair>& generators() const noexcept { return gens_; }

  Mask close(Mask m) const {
    const FiniteLattice& l = rel_.lattice();
    const std::size_t n = l.size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!(m >> i & 1)) continue;
        const Pair f = gens_[i];
        for (Element c = 0; c < n; ++c) {
          if (l.leq(f.src, c)) {
            const Element d = l.join(f.dst, c);
            if (c != d) {
              const int k = index_[c * n + d];
              if (k < 0) return full_;
              if (!(m >> k & 1)) { m |= Mask{1} << k; changed = true; }
            }
          }
          if (f.dst != c && l.leq(f.dst, c)) {
            const int g = index_[f.dst * n + c];
            if (g >= 0 && (m >> g & 1)) {
              const int k = index_[f.src * n + c];
              if (k < 0) return full_;
              if (!(m >> k & 1)) { m |= Mask{1} << k; changed = true; }
            }
          }
        }
      }
    }
    return m;
  }

  MorphClass as_class(Mask m) const {
    MorphClass c = MorphClass::identities(rel_.lattice());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (m >> i & 1) c.insert(gens_[i]);
    return c;
  }

 private:
  const RelStruct& rel_;
  std::vector<Pair> gens_;
  std::vector<int> index_;
  Mask full_ = 0;
};

// All closed masks in lectic order (Ganter's NextClosure).
std::vector<Mask> closed_masks(const GeneratorClosure& closure) {
  const std::size_t n = closure.size();
  std::vector<Mask> out;
  Mask current = closure.close(0);
  out.push_back(current);
  for (;;) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      const Mask below = k == 0 ? 0 : (k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1);
      if (current >> k & 1) continue;
      const Mask next = closure.close((current & below) | (Mask{1} << k));
      if ((next & below) == (current & below)) {
        current = next;
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

// Complements straight from the square-lifting definition.
MorphClass naive_right_complement(const FiniteLattice& l, const MorphClass& s) {
  MorphClass out(l.size());
  const auto members = s.pairs();
  for (const Pair& g : l.comparable_pairs()) {
    bool ok = true;
    for (const Pair& f : members) {
      const bool square = l.leq(f.src, g.src) && l.leq(f.dst, g.dst);
      if (square && !l.leq(f.dst, g.src)) { ok = false; break; }
    }
    if (ok) out.insert(g);
  }
  return out;
}

MorphClass naive_left_complement(const FiniteLattice& l, const MorphClass& s) {
  MorphClass out(l.size());
  const auto members = s.pairs();
  for (const Pair& f : l.comparable_pairs()) {
    bool ok = true;
    for (const Pair& g : members) {
      const bool square = l.leq(f.src, g.src) && l.leq(f.dst, g.dst);
      if (square && !l.leq(f.dst, g.src)) { ok = false; break; }
    }
    if (ok) out.insert(f);
  }
  return out;
}

void check_limits(const RelStruct& rel, const OracleLimits& limits) {
  const std::size_t n = rel.lattice().size();
  const std::size_t w = rel.weq().non_identity_pairs().size();
  const std::size_t max_weq = std::min<std::size_t>(limits.max_weq, 64);
  if (n > limits.max_elements || w > max_weq)
    throw Error(ErrorKind::CapExceeded, "instance has " + std::to_string(n) + " elements and " + std::to_string(w) +
                                            " non-identity weak equivalences; limits are " +
                                            std::to_string(limits.max_elements) + " and " + std::to_string(max_weq));
}

}  // namespace

std::size_t count_candidate_classes(const std::shared_ptr<const RelStruct>& rel, const OracleLimits& limits) {
  check_limits(*rel, limits);
  return closed_masks(GeneratorClosure(*rel)).size();
}

std::vector<ModelStruct> enumerate_model_structures(const std::shared_ptr<const RelStruct>& rel,
                                                    const OracleLimits& limits) {
  check_limits(*rel, limits);
  const GeneratorClosure closure(*rel);
  const std::vector<Mask> masks = closed_masks(closure);
  const FiniteLattice& l = rel->lattice();

  std::vector<std::optional<ModelStruct>> found(masks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const MorphClass acyclic = closure.as_class(masks[i]);
    if (!acyclic.subset_of(rel->weq())) continue;
    MorphClass fib = naive_right_complement(l, acyclic);
    MorphClass cof = naive_left_complement(l, fib & rel->weq());
    ModelStruct m(rel, std::move(cof), std::move(fib));
    verify_model(m);
    if (m.verified()) found[i] = std::move(m);
  }

  std::vector<ModelStruct> out;
  for (auto& m : found)
    if (m) out.push_back(std::move(*m));
  std::sort(out.begin(), out.end(), [](const ModelStruct& a, const ModelStruct& b) {
    if (a.cof() != b.cof()) return a.cof().pairs() < b.cof().pairs();
    return a.fib().pairs() < b.fib().pairs();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ModelStruct& a, const ModelStruct& b) { return a.same_classes(b); }),
            out.end());
  return out;
}

bool decide_by_enumeration(const std::shared_ptr<const RelStruct>& rel, const OracleLimits& limits) {
  return !enumerate_model_structures(rel, limits).empty();
}

InstanceStream::InstanceStream(InstanceGen gen) : gen_(gen), rng_(gen.seed) {}

std::shared_ptr<const RelStruct> InstanceStream::next() {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t lo = std::max<std::size_t>(gen_.min_elements, 1);
  const std::size_t hi = std::max(lo, gen_.max_elements);
  std::uniform_int_distribution<std::size_t> size_dist(lo, hi);
  for (;;) {
    const std::size_t n = size_dist(rng_);
    // Interior elements 1..n-2 under a random order compatible with index
    // order, bottom 0 and top n-1; then shuffle the labels' positions.
    std::vector<Element> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
    std::shuffle(perm.begin(), perm.end(), rng_);
    std::vector<Pair> rel;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      rel.push_back({perm[0], perm[i + 1]});
      rel.push_back({perm[i], perm[n - 1]});
    }
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        if (coin(rng_) < gen_.order_density) rel.push_back({perm[i], perm[j]});
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);

    std::shared_ptr<const FiniteLattice> lattice;
    try {
      lattice = std::make_shared<const FiniteLattice>(FiniteLattice::build(names, rel));
    } catch (const Error&) {
      continue;
    }

    const FiniteLattice& l = *lattice;
    MorphClass w = MorphClass::identities(l);
    for (const Pair& p : l.comparable_pairs())
      if (!p.is_identity() && coin(rng_) < gen_.weq_density) w.insert(p);
    const bool factor_close = coin(rng_) < gen_.factor_closure_probability;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Pair& p : w.pairs())
        for (Element c = 0; c < l.size(); ++c) {
          if (w.contains(p.dst, c) && !w.contains(p.src, c)) { w.insert({p.src, c}); changed = true; }
          if (factor_close && l.leq(p.src, c) && l.leq(c, p.dst) && !(w.contains(p.src, c) && w.contains(c, p.dst))) {
            w.insert({p.src, c});
            w.insert({c, p.dst});
            changed = true;
          }
        }
    }
    if (w.non_identity_pairs().size() > gen_.max_weq) continue;
    if (gen_.require_s2of3 && !check_s2of3(l, w).passed) continue;
    const auto pairs = w.pairs();
    return std::make_shared<const RelStruct>(validate_relative(lattice, pairs));
  }
}

std::vector<std::shared_ptr<const RelStruct>> random_instances(const InstanceGen& gen, std::size_t count) {
  InstanceStream stream(gen);
  std::vector<std::shared_ptr<const RelStruct>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace posetmc
