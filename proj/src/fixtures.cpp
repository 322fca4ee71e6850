#include "posetmc/fixtures.hpp"

#include <charconv>

#include "posetmc/error.hpp"

namespace posetmc {

namespace {

// Every pair among `members` that the covers make comparable.
void all_comparable(InstanceFile& f, const std::vector<std::string>& members,
                    const std::vector<LabelPair>& order) {
  auto lattice = FiniteLattice::build(f.elements, order);
  for (const auto& a : members)
    for (const auto& b : members)
      if (a != b && lattice.leq(lattice.index_of(a), lattice.index_of(b))) f.weq.emplace_back(a, b);
}

InstanceFile two_structures() {
  InstanceFile f;
  f.elements = {"0", "A", "B", "B'", "C", "*"};
  f.leq = {{"0", "A"}, {"A", "B"}, {"A", "B'"}, {"B", "C"}, {"B'", "C"}, {"C", "*"}};
  all_comparable(f, {"A", "B", "B'", "C"}, f.leq);
  f.add_identities = true;
  return f;
}

// U -> E -> D, U -> C -> D, U' -> C -> D', U' -> E' -> D'.
void add_gadget(InstanceFile& f, const std::string& suffix) {
  auto n = [&](const char* base, bool prime = false) { return std::string(base) + suffix + (prime ? "'" : ""); };
  for (std::string e : {n("U"), n("U", true), n("E"), n("E", true), n("C"), n("D"), n("D", true)})
    f.elements.push_back(e);
  f.leq.insert(f.leq.end(), {{n("U"), n("E")},
                             {n("U"), n("C")},
                             {n("U", true), n("C")},
                             {n("U", true), n("E", true)},
                             {n("E"), n("D")},
                             {n("C"), n("D")},
                             {n("C"), n("D", true)},
                             {n("E", true), n("D", true)}});
}

std::vector<std::string> gadget_members(const std::string& suffix) {
  return {"U" + suffix, "U" + suffix + "'", "E" + suffix, "E" + suffix + "'", "C" + suffix, "D" + suffix,
          "D" + suffix + "'"};
}

InstanceFile forced() {
  InstanceFile f;
  f.elements = {"bot"};
  add_gadget(f, "");
  f.elements.push_back("top");
  f.leq.insert(f.leq.end(), {{"bot", "U"}, {"bot", "U'"}, {"D", "top"}, {"D'", "top"}});
  all_comparable(f, gadget_members(""), f.leq);
  f.add_identities = true;
  return f;
}

InstanceFile trunc(int n) {
  InstanceFile f;
  f.elements = {"bot"};
  for (int i = 0; i <= n; ++i) f.elements.push_back("A" + std::to_string(i));
  f.leq.emplace_back("bot", "A0");
  for (int i = 0; i < n; ++i) f.leq.emplace_back("A" + std::to_string(i), "A" + std::to_string(i + 1));
  for (int g = 1; g <= n; ++g) {
    const std::string s = std::to_string(g);
    add_gadget(f, s);
    f.leq.insert(f.leq.end(), {{"bot", "U" + s}, {"bot", "U" + s + "'"}, {"D" + s, "top"}, {"D" + s + "'", "top"}});
    f.leq.emplace_back("U" + s, "A" + std::to_string(g - 1));
    f.leq.emplace_back("C" + s, "A" + s);
  }
  f.elements.push_back("top");
  f.leq.emplace_back("A" + std::to_string(n), "top");
  for (int g = 1; g <= n; ++g) all_comparable(f, gadget_members(std::to_string(g)), f.leq);
  std::vector<std::string> spine;
  for (int i = 0; i <= n; ++i) spine.push_back("A" + std::to_string(i));
  all_comparable(f, spine, f.leq);
  f.add_identities = true;
  return f;
}

InstanceFile s2of3_fail() {
  InstanceFile f;
  f.elements = {"a", "b", "c"};
  f.leq = {{"a", "b"}, {"b", "c"}};
  f.weq = {{"a", "c"}};
  f.add_identities = true;
  return f;
}

InstanceFile chain(int n) {
  InstanceFile f;
  f.elements = {"bot"};
  std::vector<std::string> marked;
  for (int i = 1; i <= n; ++i) marked.push_back("m" + std::to_string(i));
  f.elements.insert(f.elements.end(), marked.begin(), marked.end());
  f.elements.push_back("top");
  for (std::size_t i = 0; i + 1 < f.elements.size(); ++i) f.leq.emplace_back(f.elements[i], f.elements[i + 1]);
  all_comparable(f, marked, f.leq);
  f.add_identities = true;
  return f;
}

// Parses the N of "<prefix>N" within [lo, hi].
std::optional<int> suffix_number(std::string_view name, std::string_view prefix, int lo, int hi) {
  if (!name.starts_with(prefix)) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || n < lo || n > hi)
    return std::nullopt;
  return n;
}

}  // namespace

InstanceFile fixture(std::string_view name) {
  if (name == "two-structures") return two_structures();
  if (name == "forced") return forced();
  if (name == "s2of3-fail") return s2of3_fail();
  if (auto n = suffix_number(name, "trunc-", 1, 4)) return trunc(*n);
  if (auto n = suffix_number(name, "chain-", 1, 32)) return chain(*n);
  throw Error(ErrorKind::UnknownFixture, "unknown fixture \"" + std::string(name) + "\"");
}

std::vector<std::string> fixture_names() {
  return {"two-structures", "forced", "trunc-1", "trunc-2", "trunc-3", "trunc-4", "s2of3-fail", "chain-3"};
}

std::shared_ptr<const RelStruct> fixture_rel(std::string_view name) { return build_instance(fixture(name)); }

}  // namespace posetmc
