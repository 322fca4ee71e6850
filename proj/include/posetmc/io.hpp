#pragma once

// JSON file formats: instance files (a lattice plus weak equivalences),
// structure files (an instance plus cof and fib) and report files written
// by the command-line tool. All formats carry "version": 1.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetmc/centers.hpp"
#include "posetmc/lattice.hpp"
#include "posetmc/model.hpp"
#include "posetmc/relative.hpp"
#include "posetmc/report.hpp"

namespace posetmc {

inline constexpr int kFormatVersion = 1;

struct InstanceFile {
  std::vector<std::string> elements;
  std::vector<LabelPair> leq;
  std::vector<LabelPair> weq;
  bool add_identities = false;

  bool operator==(const InstanceFile&) const = default;
};

struct StructureFile {
  InstanceFile instance;
  std::vector<LabelPair> cof;
  std::vector<LabelPair> fib;

  bool operator==(const StructureFile&) const = default;
};

struct CheckRecord {
  std::string name;
  bool passed = true;
  std::vector<std::string> witness;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

struct StructureRecord {
  std::vector<LabelPair> we;
  std::vector<LabelPair> cof;
  std::vector<LabelPair> fib;
  bool verified = false;

  bool operator==(const StructureRecord&) const = default;
};

// element label -> center label
using CenterRecord = std::vector<LabelPair>;

struct ZigzagRecord {
  std::vector<std::string> nodes;       // node labels, one per structure in `structures`
  std::vector<std::string> directions;  // "->" or "<-", one per edge
  std::vector<bool> edges_verified;

  bool operator==(const ZigzagRecord&) const = default;
};

struct ReducedRecord {
  std::vector<std::string> elements;
  std::vector<LabelPair> covers;
  CenterRecord projection;  // ambient element -> reduced element

  bool operator==(const ReducedRecord&) const = default;
};

struct ReportFile {
  std::vector<std::string> command;
  std::string decision;
  std::vector<CheckRecord> checks;     // every check run
  std::vector<CheckRecord> witnesses;  // the failing ones
  std::vector<StructureRecord> structures;
  std::vector<CenterRecord> centers;
  std::optional<ZigzagRecord> zigzag;
  std::optional<ReducedRecord> reduced;
  std::optional<std::map<std::string, double>> timings;  // milliseconds

  bool operator==(const ReportFile&) const = default;
};

// Parsing throws Error(ParseError) whose message names the line and the
// field (as a JSON pointer) at fault.
InstanceFile parse_instance(std::string_view text);
StructureFile parse_structure(std::string_view text);
ReportFile parse_report(std::string_view text);

std::string print_instance(const InstanceFile& f);
std::string print_structure(const StructureFile& f);
std::string print_report(const ReportFile& f);

std::string read_text(const std::filesystem::path& path);  // throws ParseError if unreadable
void write_text(const std::filesystem::path& path, std::string_view text);

// Builds and validates the lattice and weak equivalences. Label errors are
// ParseErrors naming the field; order and subcategory errors keep their kind.
std::shared_ptr<const RelStruct> build_instance(const InstanceFile& f);
// Parse and build in one step, so that label errors name their line.
// `add_identities` forces the addIdentities option on.
std::shared_ptr<const RelStruct> load_instance(std::string_view text, bool add_identities = false);
struct LoadedStructure {
  StructureFile file;
  std::shared_ptr<const RelStruct> rel;
  ModelStruct structure;
};
LoadedStructure load_structure(std::string_view text, bool add_identities = false);
// True when the document's top level has an "instance" field.
bool is_structure_text(std::string_view text);

// Covers as leq, non-identity weak equivalences with addIdentities set.
InstanceFile to_instance_file(const RelStruct& rel);

// Resolves labels against rel (from build_instance(f.instance)).
ModelStruct build_structure(const StructureFile& f, std::shared_ptr<const RelStruct> rel);
StructureFile to_structure_file(const ModelStruct& m);

std::vector<LabelPair> label_pairs(const FiniteLattice& l, const std::vector<Pair>& pairs);
CheckRecord to_record(const FiniteLattice& l, const Check& c);
StructureRecord to_record(const ModelStruct& m);
CenterRecord to_record(const FiniteLattice& l, const CenterMap& chi);
void add_report(ReportFile& out, const FiniteLattice& l, const Report& r, const std::string& prefix = {});

}  // namespace posetmc
