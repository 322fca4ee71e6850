#include "posetmc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posetmc/error.hpp"

namespace posetmc {

using nlohmann::json;

namespace {

// Line number of every value in a syntactically valid JSON text, keyed by
// JSON pointer. nlohmann does not keep positions, so this rescans.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    skip_ws();
    if (pos_ < text_.size()) value("");
  }

  int line(const std::string& pointer) const {
    auto it = lines_.find(pointer);
    return it == lines_.end() ? 1 : it->second;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                                   text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string s;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) s += text_[pos_++];
    }
    ++pos_;
    return s;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& pointer) {
    lines_[pointer] = line_;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + escape(key));
        skip_ws();
        if (text_[pos_] == ',') { ++pos_; skip_ws(); }
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      for (std::size_t i = 0; pos_ < text_.size() && text_[pos_] != ']'; ++i) {
        value(pointer + "/" + std::to_string(i));
        skip_ws();
        if (text_[pos_] == ',') { ++pos_; skip_ws(); }
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}' &&
             text_[pos_] != ' ' && text_[pos_] != '\n' && text_[pos_] != '\t' && text_[pos_] != '\r')
        ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

// A parsed document plus enough context to name the line of a bad field.
class Doc {
 public:
  explicit Doc(std::string_view text) : text_(text) {
    try {
      root_ = json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      int line = 1;
      for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text_.size()); ++i)
        if (text_[i] == '\n') ++line;
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": malformed JSON");
    }
  }

  const json& root() const noexcept { return root_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    if (!index_) index_.emplace(text_);
    throw Error(ErrorKind::ParseError, "line " + std::to_string(index_->line(pointer)) + ", field " +
                                           (pointer.empty() ? "/" : pointer) + ": " + what);
  }

  const json& field(const json& obj, const std::string& pointer, const char* key) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, std::string("missing field \"") + key + "\"");
    return *it;
  }

  void check_version(const json& obj, const std::string& pointer) const {
    const json& v = field(obj, pointer, "version");
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
      fail(pointer + "/version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
  }

  std::string str(const json& v, const std::string& pointer) const {
    if (!v.is_string()) fail(pointer, "expected a string");
    return v.get<std::string>();
  }

  bool boolean(const json& v, const std::string& pointer) const {
    if (!v.is_boolean()) fail(pointer, "expected true or false");
    return v.get<bool>();
  }

  const json& array(const json& v, const std::string& pointer) const {
    if (!v.is_array()) fail(pointer, "expected an array");
    return v;
  }

  std::vector<std::string> strings(const json& v, const std::string& pointer) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(v, pointer).size(); ++i)
      out.push_back(str(v[i], pointer + "/" + std::to_string(i)));
    return out;
  }

  std::vector<LabelPair> pairs(const json& v, const std::string& pointer) const {
    std::vector<LabelPair> out;
    for (std::size_t i = 0; i < array(v, pointer).size(); ++i) {
      const std::string p = pointer + "/" + std::to_string(i);
      if (!v[i].is_array() || v[i].size() != 2) fail(p, "expected a pair [source, target]");
      out.emplace_back(str(v[i][0], p + "/0"), str(v[i][1], p + "/1"));
    }
    return out;
  }

 private:
  std::string_view text_;
  json root_;
  mutable std::optional<LineIndex> index_;
};

json pairs_json(const std::vector<LabelPair>& ps) {
  json a = json::array();
  for (const auto& [s, d] : ps) a.push_back({s, d});
  return a;
}

json instance_json(const InstanceFile& f) {
  return {{"version", kFormatVersion},
          {"elements", f.elements},
          {"leq", pairs_json(f.leq)},
          {"weq", pairs_json(f.weq)},
          {"options", {{"addIdentities", f.add_identities}}}};
}

InstanceFile instance_from(const Doc& doc, const json& obj, const std::string& ptr) {
  doc.check_version(obj, ptr);
  InstanceFile f;
  f.elements = doc.strings(doc.field(obj, ptr, "elements"), ptr + "/elements");
  f.leq = doc.pairs(doc.field(obj, ptr, "leq"), ptr + "/leq");
  f.weq = doc.pairs(doc.field(obj, ptr, "weq"), ptr + "/weq");
  if (auto it = obj.find("options"); it != obj.end()) {
    if (!it->is_object()) doc.fail(ptr + "/options", "expected an object");
    if (auto a = it->find("addIdentities"); a != it->end())
      f.add_identities = doc.boolean(*a, ptr + "/options/addIdentities");
  }
  return f;
}

json check_json(const CheckRecord& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}};
}

CheckRecord check_from(const Doc& doc, const json& v, const std::string& ptr) {
  CheckRecord c;
  c.name = doc.str(doc.field(v, ptr, "name"), ptr + "/name");
  c.passed = doc.boolean(doc.field(v, ptr, "passed"), ptr + "/passed");
  c.witness = doc.strings(doc.field(v, ptr, "witness"), ptr + "/witness");
  c.detail = doc.str(doc.field(v, ptr, "detail"), ptr + "/detail");
  return c;
}

std::vector<CheckRecord> checks_from(const Doc& doc, const json& v, const std::string& ptr) {
  std::vector<CheckRecord> out;
  for (std::size_t i = 0; i < doc.array(v, ptr).size(); ++i) out.push_back(check_from(doc, v[i], ptr + "/" + std::to_string(i)));
  return out;
}

std::vector<Pair> resolve(const Doc* doc, const FiniteLattice& l, const std::vector<LabelPair>& ps,
                          const std::string& ptr) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    auto a = l.find(ps[i].first);
    auto b = l.find(ps[i].second);
    auto bad = [&](const std::string& what) -> void {
      if (doc) doc->fail(p, what);
      throw Error(ErrorKind::ParseError, "field " + p + ": " + what);
    };
    if (!a) bad("unknown label \"" + ps[i].first + "\"");
    if (!b) bad("unknown label \"" + ps[i].second + "\"");
    out.push_back({*a, *b});
  }
  return out;
}

void check_labels(const Doc& doc, const InstanceFile& f, const std::string& ptr) {
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < f.elements.size(); ++i)
    if (!seen.emplace(f.elements[i], i).second)
      doc.fail(ptr + "/elements/" + std::to_string(i), "duplicate label \"" + f.elements[i] + "\"");
  auto known = [&](const std::vector<LabelPair>& ps, const std::string& field) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string p = ptr + "/" + field + "/" + std::to_string(i);
      if (!seen.count(ps[i].first)) doc.fail(p + "/0", "unknown label \"" + ps[i].first + "\"");
      if (!seen.count(ps[i].second)) doc.fail(p + "/1", "unknown label \"" + ps[i].second + "\"");
    }
  };
  known(f.leq, "leq");
  known(f.weq, "weq");
}

}  // namespace

std::shared_ptr<const RelStruct> load_instance(std::string_view text, bool add_identities) {
  Doc doc(text);
  InstanceFile f = instance_from(doc, doc.root(), "");
  f.add_identities = f.add_identities || add_identities;
  check_labels(doc, f, "");
  return build_instance(f);
}

LoadedStructure load_structure(std::string_view text, bool add_identities) {
  StructureFile f = parse_structure(text);
  f.instance.add_identities = f.instance.add_identities || add_identities;
  Doc doc(text);
  check_labels(doc, f.instance, "/instance");
  auto rel = build_instance(f.instance);
  resolve(&doc, rel->lattice(), f.cof, "/cof");
  resolve(&doc, rel->lattice(), f.fib, "/fib");
  ModelStruct m = build_structure(f, rel);
  return {std::move(f), std::move(rel), std::move(m)};
}

bool is_structure_text(std::string_view text) {
  Doc doc(text);
  return doc.root().is_object() && doc.root().contains("instance");
}

InstanceFile parse_instance(std::string_view text) {
  Doc doc(text);
  return instance_from(doc, doc.root(), "");
}

StructureFile parse_structure(std::string_view text) {
  Doc doc(text);
  const json& r = doc.root();
  doc.check_version(r, "");
  StructureFile f;
  f.instance = instance_from(doc, doc.field(r, "", "instance"), "/instance");
  f.cof = doc.pairs(doc.field(r, "", "cof"), "/cof");
  f.fib = doc.pairs(doc.field(r, "", "fib"), "/fib");
  return f;
}

ReportFile parse_report(std::string_view text) {
  Doc doc(text);
  const json& r = doc.root();
  doc.check_version(r, "");
  ReportFile f;
  f.command = doc.strings(doc.field(r, "", "command"), "/command");
  f.decision = doc.str(doc.field(r, "", "decision"), "/decision");
  f.checks = checks_from(doc, doc.field(r, "", "checks"), "/checks");
  f.witnesses = checks_from(doc, doc.field(r, "", "witnesses"), "/witnesses");
  const json& ss = doc.array(doc.field(r, "", "structures"), "/structures");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string p = "/structures/" + std::to_string(i);
    StructureRecord s;
    s.we = doc.pairs(doc.field(ss[i], p, "we"), p + "/we");
    s.cof = doc.pairs(doc.field(ss[i], p, "cof"), p + "/cof");
    s.fib = doc.pairs(doc.field(ss[i], p, "fib"), p + "/fib");
    s.verified = doc.boolean(doc.field(ss[i], p, "verified"), p + "/verified");
    f.structures.push_back(std::move(s));
  }
  const json& cs = doc.array(doc.field(r, "", "centers"), "/centers");
  for (std::size_t i = 0; i < cs.size(); ++i) f.centers.push_back(doc.pairs(cs[i], "/centers/" + std::to_string(i)));
  if (auto it = r.find("zigzag"); it != r.end() && !it->is_null()) {
    ZigzagRecord z;
    z.nodes = doc.strings(doc.field(*it, "/zigzag", "nodes"), "/zigzag/nodes");
    z.directions = doc.strings(doc.field(*it, "/zigzag", "directions"), "/zigzag/directions");
    const json& ev = doc.array(doc.field(*it, "/zigzag", "edgesVerified"), "/zigzag/edgesVerified");
    for (std::size_t i = 0; i < ev.size(); ++i)
      z.edges_verified.push_back(doc.boolean(ev[i], "/zigzag/edgesVerified/" + std::to_string(i)));
    f.zigzag = std::move(z);
  }
  if (auto it = r.find("reduced"); it != r.end() && !it->is_null()) {
    ReducedRecord d;
    d.elements = doc.strings(doc.field(*it, "/reduced", "elements"), "/reduced/elements");
    d.covers = doc.pairs(doc.field(*it, "/reduced", "covers"), "/reduced/covers");
    d.projection = doc.pairs(doc.field(*it, "/reduced", "projection"), "/reduced/projection");
    f.reduced = std::move(d);
  }
  if (auto it = r.find("timings"); it != r.end() && !it->is_null()) {
    if (!it->is_object()) doc.fail("/timings", "expected an object");
    std::map<std::string, double> t;
    for (const auto& [k, v] : it->items()) {
      if (!v.is_number()) doc.fail("/timings/" + k, "expected a number");
      t[k] = v.get<double>();
    }
    f.timings = std::move(t);
  }
  return f;
}

std::string print_instance(const InstanceFile& f) { return instance_json(f).dump(2) + "\n"; }

std::string print_structure(const StructureFile& f) {
  json j = {{"version", kFormatVersion},
            {"instance", instance_json(f.instance)},
            {"cof", pairs_json(f.cof)},
            {"fib", pairs_json(f.fib)}};
  return j.dump(2) + "\n";
}

std::string print_report(const ReportFile& f) {
  json j;
  j["version"] = kFormatVersion;
  j["command"] = f.command;
  j["decision"] = f.decision;
  j["checks"] = json::array();
  for (const auto& c : f.checks) j["checks"].push_back(check_json(c));
  j["witnesses"] = json::array();
  for (const auto& c : f.witnesses) j["witnesses"].push_back(check_json(c));
  j["structures"] = json::array();
  for (const auto& s : f.structures)
    j["structures"].push_back(
        {{"we", pairs_json(s.we)}, {"cof", pairs_json(s.cof)}, {"fib", pairs_json(s.fib)}, {"verified", s.verified}});
  j["centers"] = json::array();
  for (const auto& c : f.centers) j["centers"].push_back(pairs_json(c));
  if (f.zigzag)
    j["zigzag"] = {{"nodes", f.zigzag->nodes},
                   {"directions", f.zigzag->directions},
                   {"edgesVerified", f.zigzag->edges_verified}};
  if (f.reduced)
    j["reduced"] = {{"elements", f.reduced->elements},
                    {"covers", pairs_json(f.reduced->covers)},
                    {"projection", pairs_json(f.reduced->projection)}};
  if (f.timings) j["timings"] = *f.timings;
  return j.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
}

std::shared_ptr<const RelStruct> build_instance(const InstanceFile& f) {
  auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::build(f.elements, f.leq));
  const std::vector<Pair> weq = resolve(nullptr, *lattice, f.weq, "/weq");
  return std::make_shared<const RelStruct>(validate_relative(lattice, weq, {f.add_identities}));
}

InstanceFile to_instance_file(const RelStruct& rel) {
  const FiniteLattice& l = rel.lattice();
  InstanceFile f;
  f.elements = l.names();
  f.leq = label_pairs(l, l.covers());
  f.weq = label_pairs(l, rel.weq().non_identity_pairs());
  f.add_identities = true;
  return f;
}

ModelStruct build_structure(const StructureFile& f, std::shared_ptr<const RelStruct> rel) {
  const FiniteLattice& l = rel->lattice();
  const auto cof = resolve(nullptr, l, f.cof, "/cof");
  const auto fib = resolve(nullptr, l, f.fib, "/fib");
  return ModelStruct(rel, MorphClass::from_pairs(l, cof), MorphClass::from_pairs(l, fib));
}

StructureFile to_structure_file(const ModelStruct& m) {
  const FiniteLattice& l = m.lattice();
  return {to_instance_file(m.rel()), label_pairs(l, m.cof().pairs()), label_pairs(l, m.fib().pairs())};
}

std::vector<LabelPair> label_pairs(const FiniteLattice& l, const std::vector<Pair>& pairs) {
  std::vector<LabelPair> out;
  out.reserve(pairs.size());
  for (const Pair& p : pairs) out.emplace_back(l.name(p.src), l.name(p.dst));
  return out;
}

CheckRecord to_record(const FiniteLattice& l, const Check& c) {
  CheckRecord r{c.name, c.passed, {}, c.detail};
  for (Element e : c.witness) r.witness.push_back(e < l.size() ? l.name(e) : std::to_string(e));
  return r;
}

StructureRecord to_record(const ModelStruct& m) {
  const FiniteLattice& l = m.lattice();
  return {label_pairs(l, m.we().pairs()), label_pairs(l, m.cof().pairs()), label_pairs(l, m.fib().pairs()),
          m.verified()};
}

CenterRecord to_record(const FiniteLattice& l, const CenterMap& chi) {
  CenterRecord r;
  for (Element a = 0; a < chi.size(); ++a) r.emplace_back(l.name(a), l.name(chi(a)));
  return r;
}

void add_report(ReportFile& out, const FiniteLattice& l, const Report& r, const std::string& prefix) {
  for (const Check& c : r.checks()) {
    CheckRecord rec = to_record(l, c);
    if (!prefix.empty()) rec.name = prefix + "." + rec.name;
    if (!rec.passed) out.witnesses.push_back(rec);
    out.checks.push_back(std::move(rec));
  }
}

}  // namespace posetmc
