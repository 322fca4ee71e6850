#include "posetmc/dot.hpp"

#include <algorithm>
#include <sstream>

namespace posetmc {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const RelStruct& rel, const ModelStruct* m) {
  const FiniteLattice& l = rel.lattice();
  std::vector<Pair> edges = l.covers();
  for (const Pair& p : rel.weq().non_identity_pairs()) edges.push_back(p);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element a = 0; a < l.size(); ++a) out << "  n" << a << " [label=" << quote(l.name(a)) << "];\n";
  for (const Pair& p : edges) {
    std::vector<std::string> attrs;
    const bool we = rel.weq().contains(p);
    if (we) attrs.push_back("label=\"~\"");
    attrs.push_back(we ? "color=black" : "color=green");
    const bool cof = m && m->cof().contains(p);
    const bool fib = m && m->fib().contains(p);
    if (cof) attrs.push_back("dir=both, arrowtail=icurve");
    if (fib) attrs.push_back("arrowhead=normalnormal");
    out << "  n" << p.src << " -> n" << p.dst << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const RelStruct& rel) { return render(rel, nullptr); }
std::string export_dot(const ModelStruct& m) { return render(m.rel(), &m); }

}  // namespace posetmc
