#include "posetmc/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "posetmc/dot.hpp"
#include "posetmc/equivalence.hpp"
#include "posetmc/error.hpp"
#include "posetmc/fixtures.hpp"
#include "posetmc/invariants.hpp"
#include "posetmc/io.hpp"
#include "posetmc/oracle.hpp"
#include "posetmc/recognize.hpp"

namespace posetmc {

namespace {

struct Options {
  std::string out;
  bool timings = false;
  bool add_identities = false;
  std::uint64_t seed = 0;
};

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto time(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      Timer* t;
      std::string name;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        t->ms_[name] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
    } rec{this, name, start};
    return f();
  }
  void attach(ReportFile& r) const {
    if (enabled_) r.timings = ms_;
  }

 private:
  bool enabled_;
  std::map<std::string, double> ms_;
};

// "fixture:<name>" or a path.
std::string input_text(const std::string& arg) {
  if (arg.starts_with("fixture:")) return print_instance(fixture(arg.substr(8)));
  return read_text(arg);
}

Pair parse_pair_arg(const FiniteLattice& l, const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "expected SRC:DST, got \"" + arg + "\"");
  const Element a = l.index_of(arg.substr(0, colon));
  const Element b = l.index_of(arg.substr(colon + 1));
  if (!l.leq(a, b)) throw Error(ErrorKind::NotComparable, "not a morphism: " + arg, {a, b});
  return {a, b};
}

std::optional<CenterMap> pick_centers(const RelStruct& rel, std::size_t index) {
  if (index == 0) return find_centers(rel);
  auto all = enumerate_centers(rel, index + 1);
  if (index >= all.maps.size()) return std::nullopt;
  return all.maps[index];
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Model structures on finite lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", opt_.out, "Write the report to a file instead of stdout");
    app.add_flag("--timings", opt_.timings, "Include per-stage timings in the report");
    app.add_flag("--add-identities", opt_.add_identities, "Complete W with identities");
    app.add_option("--seed", opt_.seed, "Seed for random instances");

    std::string input, input2, method, mode = "find", save, base;
    std::vector<std::string> j_pairs;
    std::size_t limit = kDefaultCenterLimit, center_index = 0, count = 100, max_elements = 0, max_weq = 0;
    bool invariants = false, contract = false, list = false, require_s2of3 = false;

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help, std::function<int()> f) {
      CLI::App* s = app.add_subcommand(name, help);
      s->callback([&action, f] { action = f; });
      return s;
    };

    auto* validate = sub("validate", "Validate an instance file", [&] { return cmd_validate(input); });
    validate->add_option("instance", input)->required();

    auto* recognize = sub("recognize", "Decide whether a model structure exists", [&] { return cmd_recognize(input); });
    recognize->add_option("instance", input)->required();

    auto* centers = sub("centers", "Find or enumerate choices of centers",
                        [&] { return cmd_centers(mode, input, limit); });
    centers->add_option("mode", mode, "find or enumerate")->required()->check(CLI::IsMember({"find", "enumerate"}));
    centers->add_option("instance", input)->required();
    centers->add_option("--limit", limit, "Maximum number of maps to enumerate");

    auto* synth = sub("synthesize", "Construct a model structure",
                      [&] { return cmd_synthesize(input, method, j_pairs, center_index, base, save); });
    synth->add_option("instance", input)->required();
    synth->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"terminal", "centers", "centers-dual", "genmc", "newcofib"}));
    synth->add_option("--j", j_pairs, "Generating morphism SRC:DST for genmc (default: W_c)");
    synth->add_option("--center-index", center_index, "Use the k-th choice of centers in enumeration order");
    synth->add_option("--base", base, "Structure file to modify with newcofib (default: terminal)");
    synth->add_option("--save", save, "Write the structure file here");

    auto* verify = sub("verify", "Verify a structure file", [&] { return cmd_verify(input, invariants); });
    verify->add_option("structure", input)->required();
    verify->add_flag("--invariants", invariants, "Also check the structural invariants");

    auto* enumerate = sub("enumerate", "List every model structure by brute force",
                          [&] { return cmd_enumerate(input, max_elements, max_weq, save); });
    enumerate->add_option("instance", input)->required();
    enumerate->add_option("--max-elements", max_elements, "Element cap (default 10)");
    enumerate->add_option("--max-weq", max_weq, "Cap on non-identity weak equivalences (default 14, at most 64)");
    enumerate->add_option("--save", save, "Directory for one structure file per result");

    auto* zigzag = sub("zigzag", "Connect two structures by identity Quillen equivalences",
                       [&] { return cmd_zigzag(input, input2, contract); });
    zigzag->add_option("first", input)->required();
    zigzag->add_option("second", input2)->required();
    zigzag->add_flag("--contract", contract, "Merge equal adjacent nodes");

    auto* reduce = sub("reduce", "Pass to the homotopy category", [&] { return cmd_reduce(input); });
    reduce->add_option("structure", input)->required();

    auto* dot = sub("export-dot", "Render an instance or structure file as DOT", [&] { return cmd_dot(input); });
    dot->add_option("file", input)->required();

    auto* fix = sub("fixture", "Print a built-in instance", [&] { return cmd_fixture(input, list); });
    fix->add_option("name", input);
    fix->add_flag("--list", list, "List fixture names");

    auto* sample = sub("sample", "Cross-check the decision procedures on random instances",
                       [&] { return cmd_sample(count, max_elements, max_weq, require_s2of3); });
    sample->add_option("--count", count, "Number of instances");
    sample->add_option("--max-elements", max_elements, "Largest lattice (default 7)");
    sample->add_option("--max-weq", max_weq, "Most non-identity weak equivalences (default 10)");
    sample->add_flag("--s2of3", require_s2of3, "Only instances satisfying strong 2-of-3");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitInputError;
    }
    command_ = args;
    // Timings are opt-in so that default reports are byte-identical across runs.
    timer_ = Timer(opt_.timings);
    try {
      return action();
    } catch (const Error& e) {
      err_ << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
      return kExitInputError;
    }
  }

 private:
  std::shared_ptr<const RelStruct> load(const std::string& arg) {
    return timer_.time("load", [&] { return load_instance(input_text(arg), opt_.add_identities); });
  }

  LoadedStructure load_struct(const std::string& arg) {
    return timer_.time("load", [&] { return load_structure(read_text(arg), opt_.add_identities); });
  }

  ReportFile start(const std::string& decision = {}) {
    ReportFile r;
    r.command = command_;
    r.decision = decision;
    return r;
  }

  int emit(ReportFile& r, int code) {
    timer_.attach(r);
    emit_text(print_report(r));
    return code;
  }

  void emit_text(const std::string& text) {
    if (opt_.out.empty()) out_ << text;
    else write_text(opt_.out, text);
  }

  int cmd_validate(const std::string& in) {
    auto rel = load(in);
    ReportFile r = start("VALID");
    Check c{"components", true, {}, std::to_string(rel->components().size()) + " weak-equivalence components"};
    r.checks.push_back(to_record(rel->lattice(), c));
    return emit(r, kExitOk);
  }

  int cmd_recognize(const std::string& in) {
    auto rel = load(in);
    const FiniteLattice& l = rel->lattice();
    Recognition rec = timer_.time("recognize", [&] { return recognize_finite(rel); });
    ReportFile r = start(rec.yes ? "YES" : "NO");
    add_report(r, l, rec.report, "recognition");

    std::optional<CenterMap> chi;
    Check search{"center_search", true, {}, {}};
    try {
      chi = timer_.time("centers", [&] { return find_centers(*rel); });
      search.passed = chi.has_value();
      if (!chi) search.detail = "no choice of centers";
    } catch (const Error& e) {
      search.passed = false;
      search.witness = e.witness();
      search.detail = e.what();
    }
    r.checks.push_back(to_record(l, search));
    if (!search.passed) r.witnesses.push_back(r.checks.back());
    if (search.passed != rec.yes) {
      r.checks.push_back({"routes_agree", false, {}, "recognition and center search disagree"});
      r.witnesses.push_back(r.checks.back());
      r.decision = "INCONSISTENT";
    }
    if (rec.terminal) r.structures.push_back(to_record(*rec.terminal));
    if (chi) r.centers.push_back(to_record(l, *chi));
    return emit(r, rec.yes && search.passed ? kExitOk : kExitNo);
  }

  int cmd_centers(const std::string& mode, const std::string& in, std::size_t limit) {
    auto rel = load(in);
    const FiniteLattice& l = rel->lattice();
    ReportFile r = start();
    try {
      if (mode == "find") {
        auto chi = timer_.time("centers", [&] { return find_centers(*rel); });
        if (chi) {
          add_report(r, l, validate_centers(*rel, *chi), "centers");
          r.centers.push_back(to_record(l, *chi));
        }
      } else {
        auto all = timer_.time("centers", [&] { return enumerate_centers(*rel, limit); });
        for (const auto& chi : all.maps) r.centers.push_back(to_record(l, chi));
        r.checks.push_back({"truncated", !all.truncated, {}, all.truncated ? "limit reached" : ""});
        if (all.truncated) r.witnesses.push_back(r.checks.back());
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::S2OF3Failed) throw;
        r.checks.push_back(to_record(l, {"s2of3", false, e.witness(), e.what()}));
      r.witnesses.push_back(r.checks.back());
    }
    r.decision = r.centers.empty() ? "NO" : "YES";
    return emit(r, r.centers.empty() ? kExitNo : kExitOk);
  }

  int cmd_synthesize(const std::string& in, const std::string& method, const std::vector<std::string>& j_pairs,
                     std::size_t center_index, const std::string& base, const std::string& save) {
    std::shared_ptr<const RelStruct> rel;
    std::optional<ModelStruct> base_structure;
    if (!base.empty()) {
      LoadedStructure ls = load_struct(base);
      rel = ls.rel;
      base_structure = std::move(ls.structure);
    } else {
      rel = load(in);
    }
    const FiniteLattice& l = rel->lattice();
    ReportFile r = start();
    std::optional<CenterMap> chi;
    auto need_centers = [&] {
      chi = pick_centers(*rel, center_index);
      if (!chi) throw Error(ErrorKind::InvalidCenters, "no choice of centers with index " + std::to_string(center_index));
    };

    std::optional<ModelStruct> m;
    try {
      m = timer_.time("construct", [&]() -> ModelStruct {
        if (method == "terminal") return construct_terminal(rel);
        if (method == "genmc") {
          MorphClass j = MorphClass::identities(l);
          if (j_pairs.empty()) j = rel->wc();
          for (const auto& s : j_pairs) j.insert(parse_pair_arg(l, s));
          return construct_genMC(rel, j);
        }
        need_centers();
        if (method == "centers") return construct_from_centers(rel, *chi);
        if (method == "centers-dual") return construct_from_centers_dual(rel, *chi);
        if (!base_structure) base_structure = construct_terminal(rel);
        verify_model(*base_structure);
        if (!base_structure->verified()) {
          add_report(r, l, base_structure->report(), "base");
          throw Error(ErrorKind::RecognitionFailed, "base structure does not verify");
        }
        return construct_newcofib(*base_structure, *chi);
      });
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::RecognitionFailed:
        case ErrorKind::HypothesisFailed:
        case ErrorKind::InvalidCenters:
        case ErrorKind::S2OF3Failed:
          r.checks.push_back(to_record(l, {"construct", false, e.witness(), e.what()}));
          r.witnesses.push_back(r.checks.back());
          r.decision = "NO";
          return emit(r, kExitNo);
        default:
          throw;
      }
    }
    timer_.time("verify", [&] { return verify_model(*m); });
    add_report(r, l, m->report(), "verify");
    r.structures.push_back(to_record(*m));
    if (chi) r.centers.push_back(to_record(l, *chi));
    r.decision = m->verified() ? "VERIFIED" : "FAILED";
    if (!save.empty()) write_text(save, print_structure(to_structure_file(*m)));
    return emit(r, m->verified() ? kExitOk : kExitNo);
  }

  int cmd_verify(const std::string& in, bool invariants) {
    LoadedStructure ls = load_struct(in);
    ModelStruct& m = ls.structure;
    const FiniteLattice& l = m.lattice();
    timer_.time("verify", [&] { return verify_model(m); });
    ReportFile r = start();
    add_report(r, l, m.report(), "verify");
    if (invariants && m.verified()) {
      add_report(r, l, structure_invariants(m), "invariants");
      const CenterMap chi = extract_centers(m);
      add_report(r, l, center_invariants(m.rel(), chi), "centers");
      r.centers.push_back(to_record(l, chi));
    }
    r.structures.push_back(to_record(m));
    const bool ok = r.witnesses.empty();
    r.decision = ok ? "VERIFIED" : "FAILED";
    return emit(r, ok ? kExitOk : kExitNo);
  }

  int cmd_enumerate(const std::string& in, std::size_t max_elements, std::size_t max_weq, const std::string& save) {
    auto rel = load(in);
    OracleLimits limits;
    if (max_elements) limits.max_elements = max_elements;
    if (max_weq) limits.max_weq = max_weq;
    auto all = timer_.time("enumerate", [&] { return enumerate_model_structures(rel, limits); });
    ReportFile r = start(all.empty() ? "NO" : "YES");
    for (const auto& m : all) {
      r.structures.push_back(to_record(m));
      r.centers.push_back(to_record(m.lattice(), extract_centers(m)));
    }
    r.checks.push_back({"structures", true, {}, std::to_string(all.size()) + " model structures"});
    if (!save.empty()) {
      std::filesystem::create_directories(save);
      for (std::size_t i = 0; i < all.size(); ++i)
        write_text(std::filesystem::path(save) / ("structure-" + std::to_string(i) + ".json"),
                   print_structure(to_structure_file(all[i])));
    }
    return emit(r, all.empty() ? kExitNo : kExitOk);
  }

  int cmd_zigzag(const std::string& a, const std::string& b, bool contract) {
    LoadedStructure s1 = load_struct(a);
    LoadedStructure s2 = load_struct(b);
    ModelStruct m1 = std::move(s1.structure);
    ModelStruct m2(s1.rel, s2.structure.cof(), s2.structure.fib());
    is_identity_left_quillen(m1, s2.structure);  // throws MismatchedBase
    const FiniteLattice& l = m1.lattice();
    verify_model(m1);
    verify_model(m2);
    ReportFile r = start();
    add_report(r, l, m1.report(), "first");
    add_report(r, l, m2.report(), "second");
    if (!r.witnesses.empty()) {
      r.decision = "FAILED";
      return emit(r, kExitNo);
    }
    Zigzag z = timer_.time("zigzag", [&] { return build_zigzag(m1, m2, contract); });
    Report zr = verify_zigzag(z);
    add_report(r, l, zr, "zigzag");
    ZigzagRecord rec;
    rec.nodes = z.labels;
    for (std::size_t i = 0; i < z.edges(); ++i) {
      rec.directions.push_back(z.directions[i] == EdgeDirection::Forward ? "->" : "<-");
      const Check* c = zr.find("edge_" + std::to_string(i));
      rec.edges_verified.push_back(c && c->passed);
    }
    for (const auto& n : z.nodes) r.structures.push_back(to_record(n));
    r.zigzag = std::move(rec);
    const bool ok = r.witnesses.empty();
    r.decision = ok ? "VERIFIED" : "FAILED";
    return emit(r, ok ? kExitOk : kExitNo);
  }

  int cmd_reduce(const std::string& in) {
    LoadedStructure ls = load_struct(in);
    ModelStruct& m = ls.structure;
    const FiniteLattice& l = m.lattice();
    verify_model(m);
    ReportFile r = start();
    add_report(r, l, m.report(), "verify");
    if (!m.verified()) {
      r.decision = "FAILED";
      return emit(r, kExitNo);
    }
    HomotopyReduction red = timer_.time("reduce", [&] { return homotopy_reduce(m); });
    add_report(r, l, red.report, "reduce");
    add_report(r, *red.lattice, red.structure.report(), "reduced");
    ReducedRecord d;
    d.elements = red.lattice->names();
    d.covers = label_pairs(*red.lattice, red.lattice->covers());
    for (Element a = 0; a < l.size(); ++a) d.projection.emplace_back(l.name(a), red.lattice->name(red.projection[a]));
    r.reduced = std::move(d);
    r.structures.push_back(to_record(red.structure));
    const bool ok = r.witnesses.empty();
    r.decision = ok ? "VERIFIED" : "FAILED";
    return emit(r, ok ? kExitOk : kExitNo);
  }

  int cmd_dot(const std::string& in) {
    const std::string text = in.starts_with("fixture:") ? input_text(in) : read_text(in);
    if (is_structure_text(text)) {
      LoadedStructure ls = load_structure(text, opt_.add_identities);
      emit_text(export_dot(ls.structure));
    } else {
      emit_text(export_dot(*load_instance(text, opt_.add_identities)));
    }
    return kExitOk;
  }

  int cmd_fixture(const std::string& name, bool list) {
    if (list) {
      std::string text;
      for (const auto& n : fixture_names()) text += n + "\n";
      emit_text(text);
      return kExitOk;
    }
    if (name.empty()) throw Error(ErrorKind::UnknownFixture, "fixture name required");
    emit_text(print_instance(fixture(name)));
    return kExitOk;
  }

  int cmd_sample(std::size_t count, std::size_t max_elements, std::size_t max_weq, bool require_s2of3) {
    InstanceGen gen;
    gen.seed = opt_.seed;
    if (max_elements) gen.max_elements = max_elements;
    if (max_weq) gen.max_weq = max_weq;
    gen.require_s2of3 = require_s2of3;
    InstanceStream stream(gen);
    ReportFile r = start();
    std::size_t yes = 0;
    for (std::size_t i = 0; i < count; ++i) {
      auto rel = stream.next();
      const bool by_theorem = timer_.time("recognize", [&] { return recognize_finite(rel).yes; });
      bool by_centers = false;
      try {
        by_centers = timer_.time("centers", [&] { return find_centers(*rel).has_value(); });
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::S2OF3Failed) throw;
      }
      const bool by_oracle = timer_.time("enumerate", [&] { return decide_by_enumeration(rel); });
      yes += by_oracle;
      if (by_theorem != by_centers || by_theorem != by_oracle) {
        CheckRecord c{"instance_" + std::to_string(i), false, {}, print_instance(to_instance_file(*rel))};
        r.checks.push_back(c);
        r.witnesses.push_back(c);
      }
    }
    r.checks.push_back({"agreement", r.witnesses.empty(), {},
                        std::to_string(count) + " instances, " + std::to_string(yes) + " admit a model structure"});
    r.decision = r.witnesses.empty() ? "AGREE" : "DISAGREE";
    return emit(r, r.witnesses.empty() ? kExitOk : kExitNo);
  }

  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::vector<std::string> command_;
  Timer timer_{false};
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace posetmc
