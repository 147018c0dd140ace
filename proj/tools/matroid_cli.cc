// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 negative answer under
// --strict, 2 usage or input error, 3 validation or verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroid/bipartite_encoding.h"
#include "matroid/conversions.h"
#include "matroid/description.h"
#include "matroid/encode.h"
#include "matroid/errors.h"
#include "matroid/experiments.h"
#include "matroid/families.h"
#include "matroid/graph.h"
#include "matroid/intersection.h"
#include "matroid/isomorphism.h"
#include "matroid/minors.h"
#include "matroid/operations.h"
#include "matroid/reductions.h"
#include "matroid/validate.h"

namespace matroid {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kFailed = 3;

Kind ParseKind(const std::string& name) {
  auto kind = KindFromName(name);
  if (!kind) throw InputError("unknown kind '" + name + "'");
  return *kind;
}

int ParseInt(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("bad ") + what + " '" + text + "'");
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string MapText(const std::vector<int>& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(i) + "->" + std::to_string(f[i]);
  }
  return out;
}

// Converts when needed, through the order or exhaustively.
Description AsKind(const Description& desc, Kind kind) {
  if (desc.kind == kind) return desc;
  return Convert(desc, kind).description;
}

struct Options {
  // convert
  std::string in_path, to_kind, out_path;
  bool force_exhaustive = false;
  // validate
  std::string validate_path;
  // gen
  std::string as_kind;
  std::vector<std::string> gen_args;
  // minor
  std::string host_path, pattern_path, minor_algorithm = "circuits";
  // iso
  std::vector<std::string> iso_files;
  std::string encode_path;
  // intersect3
  std::vector<std::string> intersect_files;
  int k = -1;
  std::string intersect_algorithm = "bases";
  // reduce
  std::vector<std::string> reduce_args;
  int r = 3;
  std::string out_dir;
  bool verify = false;
  // sizes
  std::string family = "all", n_range, csv_path, format = "both";
  // global
  bool strict = false;
};

int RunConvert(const Options& o) {
  const Description in = ReadDescriptionFile(o.in_path);
  const ConversionResult result =
      Convert(in, ParseKind(o.to_kind), o.force_exhaustive);
  const std::string plan = result.plan.ToString(in.kind, result.description.kind);
  if (o.out_path.empty() || o.out_path == "-") {
    std::cerr << "plan: " << plan << '\n';
  } else {
    std::cout << "plan: " << plan << '\n';
  }
  WriteText(o.out_path, Serialize(result.description));
  return kOk;
}

int RunValidate(const Options& o) {
  const ValidationReport report = Validate(ReadDescriptionFile(o.validate_path));
  std::cout << report.ToString();
  return report.ok() ? kOk : kFailed;
}

int RunGen(const Options& o) {
  const auto& a = o.gen_args;
  if (a.empty()) throw InputError("gen: missing generator");
  auto need = [&](size_t count) {
    if (a.size() != count + 1) {
      throw InputError("gen " + a[0] + ": expected " + std::to_string(count) +
                       " argument(s)");
    }
  };
  std::optional<Description> direct;
  std::optional<MatroidView> view;
  Kind default_kind = Kind::kBases;
  if (a[0] == "uniform") {
    need(2);
    view = Uniform(ParseInt(a[1], "rank"), ParseInt(a[2], "size"));
  } else if (a[0] == "family") {
    need(2);
    auto family = FamilyFromName(a[1]);
    if (!family) throw InputError("unknown family '" + a[1] + "'");
    view = SeparationFamily({*family, ParseInt(a[2], "n")});
  } else if (a[0] == "phi") {
    need(1);
    direct = PhiDescription(ReadGraphFile(a[1]));
    default_kind = Kind::kNonSpanningCircuits;
  } else if (a[0] == "phir") {
    need(2);
    view = PhiR(ReadGraphFile(a[1]), ParseInt(a[2], "rank"));
    default_kind = Kind::kIndependentSets;
  } else if (a[0] == "bicircular") {
    need(1);
    view = Bicircular(ReadGraphFile(a[1]));
    default_kind = Kind::kCircuits;
  } else {
    throw InputError("gen: unknown generator '" + a[0] + "'");
  }
  const Kind kind = o.as_kind.empty() ? default_kind : ParseKind(o.as_kind);
  const Description out = direct ? AsKind(*direct, kind)
                                 : EncodeFromOracle(*view, kind);
  WriteText(o.out_path, Serialize(out));
  return kOk;
}

int RunMinor(const Options& o) {
  const Description host = ReadDescriptionFile(o.host_path);
  const Description pattern_desc = ReadDescriptionFile(o.pattern_path);
  const MatroidView pattern = ViewOf(pattern_desc);
  std::optional<MinorWitness> witness;
  if (o.minor_algorithm == "circuits") {
    const bool direct = host.kind == Kind::kCircuits ||
                        host.kind == Kind::kHyperplanes;
    if (!direct) {
      std::cerr << "note: converting host from " << KindName(host.kind)
                << " to circuits\n";
    }
    witness = DetectMinorFixed(direct ? host : AsKind(host, Kind::kCircuits),
                               pattern);
  } else if (o.minor_algorithm == "exhaustive") {
    witness = DetectMinorExhaustive(ViewOf(host), pattern);
  } else {
    throw InputError("unknown minor algorithm '" + o.minor_algorithm + "'");
  }
  if (!witness) {
    std::cout << "none\n";
    return o.strict ? kNegative : kOk;
  }
  std::cout << witness->ToString(host.n) << '\n';
  return kOk;
}

int RunIso(const Options& o) {
  if (!o.encode_path.empty()) {
    if (!o.iso_files.empty()) throw InputError("iso: --encode takes one file");
    const Description desc = ReadDescriptionFile(o.encode_path);
    WriteText(o.out_path, SerializeGraph(EncodeBipartite(desc).graph));
    return kOk;
  }
  if (o.iso_files.size() != 2) throw InputError("iso: expected two files");
  const auto f = Isomorphic(ViewOf(ReadDescriptionFile(o.iso_files[0])),
                            ViewOf(ReadDescriptionFile(o.iso_files[1])));
  if (!f) {
    std::cout << "not isomorphic\n";
    return o.strict ? kNegative : kOk;
  }
  std::cout << MapText(*f) << '\n';
  return kOk;
}

int RunIntersect3(const Options& o) {
  if (o.intersect_files.size() != 3) {
    throw InputError("intersect3: expected three files");
  }
  std::vector<Description> m;
  for (const auto& path : o.intersect_files) {
    m.push_back(ReadDescriptionFile(path));
  }
  std::optional<SubsetMask> found;
  if (o.intersect_algorithm == "bases") {
    found = Intersect3Bases(AsKind(m[0], Kind::kBases), AsKind(m[1], Kind::kBases),
                            AsKind(m[2], Kind::kBases), o.k);
  } else if (o.intersect_algorithm == "exhaustive") {
    found = Intersect3Bruteforce(ViewOf(m[0]), ViewOf(m[1]), ViewOf(m[2]), o.k);
  } else {
    throw InputError("unknown intersect3 algorithm '" + o.intersect_algorithm +
                     "'");
  }
  if (!found) {
    std::cout << "none\n";
    return o.strict ? kNegative : kOk;
  }
  std::cout << ToBitstring(*found, m[0].n) << '\n';
  return kOk;
}

// Writes to out_dir/name, or to stdout under a comment header.
void Emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out_dir.empty()) {
    std::cout << "# " << name << '\n' << text;
    return;
  }
  std::filesystem::create_directories(o.out_dir);
  WriteText((std::filesystem::path(o.out_dir) / name).string(), text);
  std::cout << "wrote " << (std::filesystem::path(o.out_dir) / name).string()
            << '\n';
}

int Verdict(const Options& o, bool graph_side, bool matroid_side) {
  std::cout << "graph side: " << (graph_side ? "yes" : "no")
            << "\nmatroid side: " << (matroid_side ? "yes" : "no") << '\n';
  if (graph_side != matroid_side) {
    std::cout << "MISMATCH\n";
    return kFailed;
  }
  std::cout << "agree\n";
  return (o.strict && !graph_side) ? kNegative : kOk;
}

int RunReduce(const Options& o) {
  const auto& a = o.reduce_args;
  if (a.empty()) throw InputError("reduce: missing problem");
  if (a[0] == "3dm") {
    if (a.size() != 2) throw InputError("reduce 3dm: expected FILE");
    const TripleSystem system = ReadTripleSystemFile(a[1]);
    const ThreeDmReduction red = Reduce3dm(system);
    for (int i = 0; i < 3; ++i) {
      const std::string stem = "m" + std::to_string(i + 1);
      Emit(o, stem + ".circuits", Serialize(red.circuits[static_cast<size_t>(i)]));
      Emit(o, stem + ".hyperplanes",
           Serialize(red.hyperplanes[static_cast<size_t>(i)]));
    }
    for (const auto& [side, value] : red.empty_classes) {
      std::cout << "empty class: side " << side << " value " << value
                << " (size " << red.target << " unreachable)\n";
    }
    std::cout << "target: " << red.target << '\n';
    if (!o.verify) return kOk;
    const bool matching = FindMatching(system).has_value();
    std::array<Description, 3> bases;
    std::array<std::optional<MatroidView>, 3> views;
    for (size_t i = 0; i < 3; ++i) {
      views[i] = ViewOf(red.circuits[i]);
      bases[i] = EncodeFromOracle(*views[i], Kind::kBases);
    }
    const bool brute =
        Intersect3Bruteforce(*views[0], *views[1], *views[2], red.target)
            .has_value();
    const bool by_bases =
        Intersect3Bases(bases[0], bases[1], bases[2], red.target).has_value();
    if (brute != by_bases) {
      std::cout << "intersection algorithms disagree\n";
      return kFailed;
    }
    return Verdict(o, matching, brute);
  }
  if (a[0] == "subgraph") {
    if (a.size() != 3) throw InputError("reduce subgraph: expected G H");
    const MultiGraph g = ReadGraphFile(a[1]);
    const MultiGraph h = ReadGraphFile(a[2]);
    const auto [phi_g, phi_h] = ReduceSubgraphIso(g, h);
    Emit(o, "phi_g.independent", Serialize(phi_g));
    Emit(o, "phi_h.independent", Serialize(phi_h));
    if (!o.verify) return kOk;
    return Verdict(o, FindSubgraph(g, h).has_value(),
                   DetectMinorExhaustive(ViewOf(phi_g), ViewOf(phi_h))
                       .has_value());
  }
  if (a[0] == "indepset") {
    if (a.size() != 2) throw InputError("reduce indepset: expected GRAPH");
    if (o.k < 0) throw InputError("reduce indepset: -k is required");
    const MultiGraph g = ReadGraphFile(a[1]);
    const IndependentSetReduction red = ReduceIndependentSet(g, o.k, o.r);
    Emit(o, "phi_r.independent", Serialize(red.phi_r));
    std::cout << "target: U_{" << red.target.rank << "," << red.target.size
              << "}\n";
    if (!o.verify) return kOk;
    const bool graph_side = FindIndependentVertices(g, o.k).has_value();
    bool matroid_side = false;
    if (red.target.size >= red.target.rank) {
      matroid_side = DetectMinorExhaustive(
                         ViewOf(red.phi_r),
                         Uniform(red.target.rank, red.target.size))
                         .has_value();
    } else {
      std::cout << "target smaller than its rank; no uniform minor defined\n";
    }
    return Verdict(o, graph_side, matroid_side);
  }
  throw InputError("reduce: unknown problem '" + a[0] + "'");
}

int RunSizes(const Options& o) {
  std::vector<ExperimentReport> reports;
  if (o.family == "all") {
    if (!o.n_range.empty()) {
      throw InputError("sizes: --n-range needs a single --family");
    }
    reports = RunSeparationSuite();
  } else {
    auto family = FamilyFromName(o.family);
    if (!family) throw InputError("unknown family '" + o.family + "'");
    int lo = InfoOf(*family).default_lo;
    int hi = InfoOf(*family).default_hi;
    if (!o.n_range.empty()) {
      const size_t dots = o.n_range.find("..");
      if (dots == std::string::npos) {
        lo = hi = ParseInt(o.n_range, "n-range");
      } else {
        lo = ParseInt(o.n_range.substr(0, dots), "n-range");
        hi = ParseInt(o.n_range.substr(dots + 2), "n-range");
      }
    }
    if (lo > hi) throw InputError("sizes: empty n-range");
    reports = RunFamilyRange(*family, lo, hi);
  }
  const std::string table = FormatTable(reports);
  const std::string csv = FormatCsv(reports);
  if (o.format == "table") {
    std::cout << table;
  } else if (o.format == "csv") {
    std::cout << csv;
  } else if (o.format == "both") {
    std::cout << table << '\n' << csv;
  } else {
    throw InputError("unknown format '" + o.format + "'");
  }
  if (!o.csv_path.empty()) WriteText(o.csv_path, csv);
  for (const auto& r : reports) {
    if (r.skipped) {
      std::cerr << "skipped " << InfoOf(r.family).tag << " n=" << r.n << ": "
                << r.skip_reason << '\n';
    }
  }
  return AllPassed(reports) ? kOk : kFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Matroid description toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--strict", o.strict, "Exit 1 on a negative answer");

  auto* convert = app.add_subcommand("convert", "Convert a description");
  convert->add_option("--in", o.in_path, "Input file")->required();
  convert->add_option("--to", o.to_kind, "Target kind")->required();
  convert->add_option("-o,--out", o.out_path, "Output file (default stdout)");
  convert->add_flag("--force-exhaustive", o.force_exhaustive,
                    "Re-encode through the full rank table");

  auto* validate = app.add_subcommand("validate", "Check the matroid axioms");
  validate->add_option("file", o.validate_path, "Description file")->required();

  auto* gen = app.add_subcommand(
      "gen", "Generate: uniform R N | family TAG N | phi GRAPH | phir GRAPH R | "
             "bicircular GRAPH");
  gen->add_option("args", o.gen_args, "Generator and its arguments")
      ->required();
  gen->add_option("--as", o.as_kind, "Output kind");
  gen->add_option("-o,--out", o.out_path, "Output file (default stdout)");

  auto* minor = app.add_subcommand("minor", "Search for a minor");
  minor->add_option("--host", o.host_path, "Host description")->required();
  minor->add_option("--pattern", o.pattern_path, "Pattern description")
      ->required();
  minor->add_option("--algorithm", o.minor_algorithm, "circuits|exhaustive");
  minor->add_flag("--strict", o.strict, "Exit 1 when no minor exists");

  auto* iso = app.add_subcommand("iso", "Isomorphism test or graph encoding");
  iso->add_option("files", o.iso_files, "Two description files");
  iso->add_option("--encode", o.encode_path,
                  "Emit the bipartite graph encoding of this file");
  iso->add_option("-o,--out", o.out_path, "Output file for --encode");
  iso->add_flag("--strict", o.strict, "Exit 1 when not isomorphic");

  auto* intersect = app.add_subcommand("intersect3",
                                       "Common independent set of size k");
  intersect->add_option("files", o.intersect_files, "Three description files")
      ->required();
  intersect->add_option("-k", o.k, "Target size")->required();
  intersect->add_option("--algorithm", o.intersect_algorithm,
                        "bases|exhaustive");
  intersect->add_flag("--strict", o.strict, "Exit 1 when none exists");

  auto* reduce = app.add_subcommand(
      "reduce", "Build instances: 3dm FILE | subgraph G H | indepset GRAPH");
  reduce->add_option("args", o.reduce_args, "Problem and input files")
      ->required();
  reduce->add_option("-k", o.k, "Independent set size");
  reduce->add_option("-r", o.r, "Target rank (indepset)");
  reduce->add_option("--out-dir", o.out_dir, "Directory for emitted files");
  reduce->add_flag("--verify", o.verify, "Solve both sides and compare");
  reduce->add_flag("--strict", o.strict, "Exit 1 when the answer is no");

  auto* sizes = app.add_subcommand("sizes", "Separation family size table");
  sizes->add_option("--family", o.family, "Family tag or name, or all");
  sizes->add_option("--n-range", o.n_range, "A..B");
  sizes->add_option("--csv", o.csv_path, "Also write the CSV here");
  sizes->add_option("--format", o.format, "table|csv|both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*convert) return RunConvert(o);
    if (*validate) return RunValidate(o);
    if (*gen) return RunGen(o);
    if (*minor) return RunMinor(o);
    if (*iso) return RunIso(o);
    if (*intersect) return RunIntersect3(o);
    if (*reduce) return RunReduce(o);
    if (*sizes) return RunSizes(o);
  } catch (const MatroidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace
}  // namespace matroid

int main(int argc, char** argv) { return matroid::Main(argc, argv); }
