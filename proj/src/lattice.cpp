#include "posetmc/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "posetmc/error.hpp"

namespace posetmc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotPushoutClosed: return "NotPushoutClosed";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NotCompositionClosed: return "NotCompositionClosed";
    case ErrorKind::MissingIdentities: return "MissingIdentities";
    case ErrorKind::S2OF3Failed: return "S2OF3Failed";
    case ErrorKind::RecognitionFailed: return "RecognitionFailed";
    case ErrorKind::InvalidCenters: return "InvalidCenters";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::JNotInW: return "JNotInW";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::NotWeakEquivalence: return "NotWeakEquivalence";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

FiniteLattice FiniteLattice::build(std::vector<std::string> names, std::span<const LabelPair> relations,
                                   std::size_t max_elements) {
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<Element>(i)).second)
      throw Error(ErrorKind::DuplicateLabel, "duplicate element label '" + names[i] + "'",
                  {static_cast<Element>(i)});
  }
  std::vector<Pair> indexed;
  indexed.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown element label '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown element label '" + b + "'");
    indexed.push_back({ia->second, ib->second});
  }
  return build(std::move(names), indexed, max_elements);
}

FiniteLattice FiniteLattice::build(std::vector<std::string> names, std::span<const Pair> relations,
                                   std::size_t max_elements) {
  const std::size_t n = names.size();
  if (n > max_elements)
    throw Error(ErrorKind::TooLarge,
                "lattice has " + std::to_string(n) + " elements; the limit is " + std::to_string(max_elements));
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(ErrorKind::DuplicateLabel, "duplicate element label '" + *dup + "'");
  }
  if (n == 0) throw Error(ErrorKind::Unbounded, "empty lattice has no bottom or top");

  FiniteLattice l;
  l.names_ = std::move(names);
  l.up_ = BitMatrix(n);
  for (std::size_t i = 0; i < n; ++i) l.up_.set(i, i);
  for (const Pair& p : relations) {
    if (p.src >= n || p.dst >= n) throw Error(ErrorKind::UnknownLabel, "relation references an unknown element");
    l.up_.set(p.src, p.dst);
  }
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (l.up_.test(i, k)) l.up_.or_row(i, k);

  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (l.up_.test(a, b) && l.up_.test(b, a))
        throw Error(ErrorKind::CycleDetected,
                    "order has a cycle through '" + l.names_[a] + "' and '" + l.names_[b] + "'", {a, b});

  l.down_ = BitMatrix(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (l.up_.test(a, b)) l.down_.set(b, a);

  std::optional<Element> bottom, top;
  for (Element a = 0; a < n; ++a) {
    if (l.up_.row_count(a) == n) bottom = a;
    if (l.down_.row_count(a) == n) top = a;
  }
  if (!bottom || !top)
    throw Error(ErrorKind::Unbounded, !bottom ? "order has no least element" : "order has no greatest element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  // The join of a and b is the unique upper bound whose filter equals the
  // set of common upper bounds; dually for meets.
  std::vector<std::size_t> up_count(n), down_count(n);
  for (std::size_t a = 0; a < n; ++a) {
    up_count[a] = l.up_.row_count(a);
    down_count[a] = l.down_.row_count(a);
  }
  const std::size_t words = l.up_.words_per_row();
  std::vector<std::uint64_t> bounds(words);
  auto least_in = [&](const BitMatrix& rows, const std::vector<std::size_t>& counts, Element a,
                      Element b) -> std::optional<Element> {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words; ++w) {
      bounds[w] = rows.row(a)[w] & rows.row(b)[w];
      total += std::popcount(bounds[w]);
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = bounds[w];
      while (word) {
        const auto c = static_cast<Element>(w * 64 + std::countr_zero(word));
        if (counts[c] == total) return c;
        word &= word - 1;
      }
    }
    return std::nullopt;
  };
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto j = least_in(l.up_, up_count, a, b);
      auto m = least_in(l.down_, down_count, a, b);
      if (!j || !m)
        throw Error(ErrorKind::NotALattice,
                    "'" + l.names_[a] + "' and '" + l.names_[b] + "' have no " + (!j ? "join" : "meet"), {a, b});
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
    }
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (l.up_.test(a, b)) l.pairs_.push_back({a, b});
  return l;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element FiniteLattice::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::UnknownLabel, "unknown element label '" + std::string(label) + "'");
}

std::vector<Pair> FiniteLattice::covers() const {
  std::vector<Pair> out;
  for (const Pair& p : pairs_) {
    if (p.is_identity()) continue;
    bool cover = true;
    for (Element m = 0; m < size() && cover; ++m)
      if (m != p.src && m != p.dst && leq(p.src, m) && leq(m, p.dst)) cover = false;
    if (cover) out.push_back(p);
  }
  return out;
}

std::string FiniteLattice::describe(Pair p) const { return "(" + name(p.src) + ", " + name(p.dst) + ")"; }

Element join_all(const FiniteLattice& lattice, std::span<const Element> s) {
  Element acc = lattice.bottom();
  for (Element e : s) acc = lattice.join(acc, e);
  return acc;
}

Element meet_all(const FiniteLattice& lattice, std::span<const Element> s) {
  Element acc = lattice.top();
  for (Element e : s) acc = lattice.meet(acc, e);
  return acc;
}

Pair pushout_of(const FiniteLattice& lattice, Pair f, Element c) {
  if (!lattice.valid(f) || c >= lattice.size() || !lattice.leq(f.src, c))
    throw Error(ErrorKind::NotComparable, "pushout needs src f <= c", {f.src, f.dst, c});
  return {c, lattice.join(f.dst, c)};
}

Pair pullback_of(const FiniteLattice& lattice, Pair f, Element c) {
  if (!lattice.valid(f) || c >= lattice.size() || !lattice.leq(c, f.dst))
    throw Error(ErrorKind::NotComparable, "pullback needs c <= dst f", {f.src, f.dst, c});
  return {lattice.meet(f.src, c), c};
}

}  // namespace posetmc
