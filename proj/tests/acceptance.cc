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

// Acceptance run: one PASS/FAIL line per criterion. Exact comparisons
// throughout; wall-clock limits are part of the criterion where stated.
//
// Usage: acceptance GOLDEN_DIR

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "corpus.h"
#include "matroid/bipartite_encoding.h"
#include "matroid/conversions.h"
#include "matroid/encode.h"
#include "matroid/experiments.h"
#include "matroid/families.h"
#include "matroid/intersection.h"
#include "matroid/isomorphism.h"
#include "matroid/minors.h"
#include "matroid/reductions.h"
#include "oracles.h"

namespace {

using matroid::Description;
using matroid::Kind;
using matroid::MatroidView;
using matroid::MultiGraph;
using matroid::SubsetMask;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void Require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

std::int64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t Pow(std::int64_t b, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

MultiGraph FromOracle(const oracle::Graph& g) {
  return matroid::MakeGraph(g.v, g.edges);
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome SeparationCounts() {
  using matroid::Family;
  struct Expect {
    Family family;
    int n;
    std::string kind;
    std::int64_t value;
    bool at_most;
  };
  std::vector<Expect> expect;
  for (int n = 3; n <= 6; ++n) {
    expect.push_back({Family::kCorankOneUniform, n, "spanning", n + 1, false});
    expect.push_back({Family::kCorankOneUniform, n, "flats", Pow(2, n) - n, false});
    expect.push_back({Family::kRankOneUniform, n, "independent", n + 1, false});
    expect.push_back({Family::kRankOneUniform, n, "spanning", Pow(2, n) - 1, false});
    expect.push_back({Family::kDoubledCorankOne, n, "hyperplanes", (n * n - n) / 2, false});
    expect.push_back({Family::kDoubledCorankOne, n, "cyclicflats-nonempty",
                      Pow(2, n) - n - 1, false});
  }
  expect.push_back({Family::kTruncatedBlowupSum, 3, "nsc", 36, false});
  expect.push_back({Family::kTruncatedBlowupSum, 3, "flats", 32, true});
  expect.push_back({Family::kTruncatedBlowupSum, 4, "nsc", 280, false});
  for (int n = 2; n <= 3; ++n) {
    expect.push_back({Family::kHalfUniformPlusParallel, n, "cyclicflats", 3, false});
    expect.push_back({Family::kHalfUniformPlusParallel, n, "dephyp",
                      Choose(2 * n - 1, n - 2), false});
    expect.push_back({Family::kHalfUniform, n, "nsc", 0, false});
    expect.push_back({Family::kHalfUniform, n, "circuits", Choose(2 * n, n + 1), false});
  }
  Outcome out;
  std::map<std::pair<int, int>, matroid::ExperimentReport> cache;
  for (const Expect& e : expect) {
    const auto key = std::make_pair(static_cast<int>(e.family), e.n);
    if (!cache.count(key)) cache.emplace(key, matroid::RunFamily({e.family, e.n}));
    const auto& report = cache.at(key);
    const std::string label = std::string(matroid::InfoOf(e.family).tag) +
                              " n=" + std::to_string(e.n) + " " + e.kind;
    out.Require(!report.skipped, label + " skipped");
    bool found = false;
    for (const auto& row : report.rows) {
      if (row.kind != e.kind) continue;
      found = true;
      const bool good = e.at_most ? row.listed_sets <= e.value
                                  : row.listed_sets == e.value;
      out.Require(good, label + " = " + std::to_string(row.listed_sets) +
                            (e.at_most ? ", expected <= " : ", expected ") +
                            std::to_string(e.value));
    }
    out.Require(found, label + " missing");
  }
  out.detail = std::to_string(expect.size()) + " identities";
  return out;
}

Outcome EdgeSoundness() {
  Outcome out;
  int checks = 0;
  for (const auto& entry : corpus::Matroids(7)) {
    for (const auto& edge : matroid::kOrderEdges) {
      const Description converted = matroid::ConvertEdge(
          matroid::EncodeFromOracle(entry.view, edge.from), edge.to);
      out.Require(matroid::SameMatroid(matroid::ViewOf(converted), entry.view),
                  entry.name + ": " + std::string(matroid::KindName(edge.from)) +
                      " -> " + std::string(matroid::KindName(edge.to)));
      ++checks;
    }
  }
  out.detail = std::to_string(checks) + " edge conversions";
  return out;
}

Outcome CyclicFlats() {
  Outcome out;
  int count = 0;
  for (const auto& entry : corpus::Matroids(7)) {
    const int n = entry.view.size();
    const oracle::Classify c(n, oracle::RankOf(entry.view));
    matroid::CyclicFlatTrace trace;
    const Description cf = matroid::CyclicFlatsFromBases(
        matroid::EncodeFromOracle(entry.view, Kind::kBases), &trace);
    out.Require(trace.max_list <= trace.bases, entry.name + ": list exceeds b(M)");
    out.Require(trace.passes <= trace.rank, entry.name + ": passes exceed r(M)");
    out.Require(oracle::Bits(cf.sets) == c.All(oracle::Family::kCyclicFlats),
                entry.name + ": output differs from enumeration");
    const auto [z, b] = matroid::CountCyclicFlatsVsBases(entry.view);
    out.Require(z <= b, entry.name + ": z > b");
    ++count;
  }
  out.detail = std::to_string(count) + " matroids";
  return out;
}

Outcome MinorDetection() {
  Outcome out;
  std::vector<corpus::Entry> hosts;
  for (auto& e : corpus::Matroids(9)) hosts.push_back(e);
  hosts.push_back({"Phi(P3)", matroid::Phi(matroid::PathGraph(3))});
  hosts.push_back({"Phi(K3)", matroid::Phi(matroid::CompleteGraph(3))});
  hosts.push_back({"Phi3(P3)", matroid::PhiR(matroid::PathGraph(3), 3)});
  hosts.push_back({"Phi3(K3)", matroid::PhiR(matroid::CompleteGraph(3), 3)});
  const std::vector<std::pair<std::string, MatroidView>> patterns = {
      {"U2,4", matroid::Uniform(2, 4)},
      {"U3,4", matroid::Uniform(3, 4)},
      {"U2,3", matroid::Uniform(2, 3)},
      {"Phi(P3)", matroid::Phi(matroid::PathGraph(3))},
  };
  int pairs = 0;
  int positive = 0;
  for (const auto& host : hosts) {
    const Description circuits =
        matroid::EncodeFromOracle(host.view, Kind::kCircuits);
    for (const auto& [name, pattern] : patterns) {
      const std::string label = host.name + " / " + name;
      const auto fixed = matroid::DetectMinorFixed(circuits, pattern);
      const auto exhaustive = matroid::DetectMinorExhaustive(host.view, pattern);
      out.Require(fixed.has_value() == exhaustive.has_value(),
                  label + ": decisions differ");
      if (fixed) {
        out.Require(matroid::VerifyMinorWitness(host.view, pattern, *fixed),
                    label + ": invalid fixed witness");
      }
      if (exhaustive) {
        out.Require(matroid::VerifyMinorWitness(host.view, pattern, *exhaustive),
                    label + ": invalid exhaustive witness");
        ++positive;
      }
      ++pairs;
    }
  }
  out.detail = std::to_string(pairs) + " pairs, " + std::to_string(positive) +
               " positive";
  return out;
}

Outcome ThreeDm() {
  Outcome out;
  int systems = 0;
  int matched = 0;
  for (int s = 1; s <= 3; ++s) {
    std::vector<std::array<int, 3>> all;
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) {
        for (int c = 0; c < s; ++c) all.push_back({a, b, c});
      }
    }
    const int pool = static_cast<int>(all.size());
    for (int t = 1; t <= std::min(5, pool); ++t) {
      matroid::ForEachKSubset(SubsetMask::Full(pool), t, [&](SubsetMask pick) {
        std::vector<std::array<int, 3>> triples;
        for (int i : pick) triples.push_back(all[static_cast<std::size_t>(i)]);
        const auto sys = matroid::MakeTripleSystem(s, triples);
        const bool direct = oracle::HasPerfectMatching(s, triples);
        const auto red = matroid::Reduce3dm(sys);
        std::array<MatroidView, 3> views = {matroid::ViewOf(red.circuits[0]),
                                            matroid::ViewOf(red.circuits[1]),
                                            matroid::ViewOf(red.circuits[2])};
        std::array<Description, 3> bases;
        for (int q = 0; q < 3; ++q) {
          bases[static_cast<std::size_t>(q)] =
              matroid::Convert(red.hyperplanes[static_cast<std::size_t>(q)],
                               Kind::kBases)
                  .description;
        }
        const auto brute =
            matroid::Intersect3Bruteforce(views[0], views[1], views[2], red.target);
        const auto fast =
            matroid::Intersect3Bases(bases[0], bases[1], bases[2], red.target);
        const std::string label = matroid::SerializeTripleSystem(sys);
        out.Require(brute.has_value() == direct, "bruteforce differs on\n" + label);
        out.Require(fast.has_value() == direct, "bases differs on\n" + label);
        out.Require(matroid::FindMatching(sys).has_value() == direct,
                    "matching search differs on\n" + label);
        ++systems;
        matched += direct;
        return true;
      });
    }
  }
  out.detail = std::to_string(systems) + " triple systems, " +
               std::to_string(matched) + " with a matching";
  return out;
}

Outcome IndependentSetRoundTrip() {
  Outcome out;
  int instances = 0;
  int graphs = 0;
  for (int v = 3; v <= 4; ++v) {
    for (const oracle::Graph& og : oracle::AllSimpleGraphs(v)) {
      const MultiGraph g = FromOracle(og);
      const std::string label = matroid::SerializeGraph(g);
      ++graphs;
      // Shape of the non-spanning circuits.
      const MatroidView phi = matroid::PhiR(g, 3);
      const int t = matroid::SubdivisionLength(3);
      const auto nsc = matroid::EncodeFromOracle(phi, Kind::kNonSpanningCircuits);
      std::vector<SubsetMask> shape;
      for (int k = 0; k < g.edge_count(); ++k) {
        auto [u, w] = g.edges[static_cast<std::size_t>(k)];
        shape.push_back(SubsetMask::Of({u, w, v + k}));
      }
      std::sort(shape.begin(), shape.end(), matroid::CanonicalLess);
      out.Require(nsc.sets == shape, "NSC shape on\n" + label);
      for (SubsetMask s : nsc.sets) {
        out.Require(s.size() == t + 2, "NSC size on\n" + label);
      }
      for (int k = 1; k <= v; ++k) {
        const auto red = matroid::ReduceIndependentSet(g, k, 3);
        // A rank-3 uniform target needs at least three elements.
        if (red.target.size < red.target.rank) continue;
        const bool graph_side = oracle::HasIndependentVertices(og, k);
        const auto w = matroid::DetectMinorExhaustive(
            matroid::ViewOf(red.phi_r),
            matroid::Uniform(red.target.rank, red.target.size));
        out.Require(w.has_value() == graph_side,
                    "k=" + std::to_string(k) + " on\n" + label);
        ++instances;
      }
    }
  }
  out.detail = std::to_string(graphs) + " graphs, " + std::to_string(instances) +
               " (G, k) instances";
  return out;
}

Outcome IsomorphismProperties() {
  Outcome out;
  std::vector<std::pair<MultiGraph, MultiGraph>> pairs;
  const auto three = oracle::AllSimpleGraphs(3);
  for (const auto& a : three) {
    for (const auto& b : three) pairs.emplace_back(FromOracle(a), FromOracle(b));
  }
  // Selected four-vertex pairs: every pair of class representatives and
  // each representative against a relabeled copy.
  std::mt19937 rng(23);
  const auto classes = oracle::SimpleGraphClasses(4);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i].edges.size() != classes[j].edges.size()) continue;
      pairs.emplace_back(FromOracle(classes[i]), FromOracle(classes[j]));
    }
    std::vector<int> p = {0, 1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : classes[i].edges) {
      edges.emplace_back(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(w)]);
    }
    pairs.emplace_back(FromOracle(classes[i]), matroid::MakeGraph(4, edges));
  }
  int iso_pairs = 0;
  for (const auto& [g, h] : pairs) {
    const std::string label =
        matroid::SerializeGraph(g) + "vs\n" + matroid::SerializeGraph(h);
    const bool graphs = oracle::GraphsIsomorphic({g.vertices, g.edges},
                                                 {h.vertices, h.edges});
    const Description pg = matroid::PhiDescription(g);
    const Description ph = matroid::PhiDescription(h);
    const auto f = matroid::Isomorphic(matroid::ViewOf(pg), matroid::ViewOf(ph));
    out.Require(f.has_value() == graphs, "Phi isomorphism on\n" + label);
    if (f) {
      out.Require(matroid::IsIsomorphism(matroid::ViewOf(pg), matroid::ViewOf(ph), *f),
                  "invalid bijection on\n" + label);
    }
    const bool encoded =
        matroid::GraphIsomorphism(matroid::EncodeBipartite(pg).graph,
                                  matroid::EncodeBipartite(ph).graph)
            .has_value();
    out.Require(encoded == f.has_value(), "bipartite encoding on\n" + label);
    iso_pairs += graphs;
  }
  for (const auto& og : three) {
    const MultiGraph g = FromOracle(og);
    const MatroidView truncated =
        matroid::Truncate(matroid::Bicircular(matroid::AddLoops(g, 2)), 3);
    out.Require(matroid::SameMatroid(matroid::Phi(g), truncated),
                "truncation identity on\n" + matroid::SerializeGraph(g));
  }
  out.detail = std::to_string(pairs.size()) + " graph pairs, " +
               std::to_string(iso_pairs) + " isomorphic";
  return out;
}

Outcome FormatStability(const std::filesystem::path& golden) {
  Outcome out;
  int files = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(golden)) {
    paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    const std::string ext = path.extension().string();
    if (ext == ".csv" || ext == ".table" || ext == ".expected") continue;
    const std::string text = Slurp(path);
    std::string again;
    if (ext == ".graph") {
      again = matroid::SerializeGraph(matroid::ParseGraph(text));
    } else if (ext == ".3dm") {
      again = matroid::SerializeTripleSystem(matroid::ParseTripleSystem(text));
    } else {
      again = matroid::Serialize(matroid::ParseDescription(text));
    }
    out.Require(again == text, path.filename().string() + " not bit-exact");
    ++files;
  }
  out.Require(files > 0, "no golden files found in " + golden.string());
  int pairs = 0;
  for (const auto& entry : corpus::Matroids(matroid::kMaxElements)) {
    for (Kind kind : matroid::kAllKinds) {
      const Description d = matroid::EncodeFromOracle(entry.view, kind);
      out.Require(matroid::EncodeFromOracle(matroid::ViewOf(d), kind) == d,
                  entry.name + " " + std::string(matroid::KindName(kind)) +
                      ": decode/encode not idempotent");
      out.Require(matroid::ParseDescription(matroid::Serialize(d)) == d,
                  entry.name + " " + std::string(matroid::KindName(kind)) +
                      ": parse/serialize not identity");
      ++pairs;
    }
  }
  out.detail = std::to_string(files) + " golden files, " + std::to_string(pairs) +
               " corpus descriptions";
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance GOLDEN_DIR\n";
    return 2;
  }
  const std::filesystem::path golden = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "separation counts", 10, SeparationCounts},
      {2, "conversion lattice soundness", 60, EdgeSoundness},
      {3, "cyclic flats from bases", 0, CyclicFlats},
      {4, "fixed vs exhaustive minor detection", 120, MinorDetection},
      {5, "3DM round trip", 0, ThreeDm},
      {6, "independent set round trip at r=3", 120, IndependentSetRoundTrip},
      {7, "isomorphism properties", 0, IsomorphismProperties},
      {8, "format stability", 0, [&] { return FormatStability(golden); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds && o.ok) {
      o.ok = false;
      o.failure = "time limit exceeded";
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
         << " [" << o.detail << (o.detail.empty() ? "" : "; ") << std::fixed
         << std::setprecision(2) << seconds << " s";
    if (c.limit_seconds > 0) line << " < " << c.limit_seconds << " s";
    line << "; exact]";
    if (!o.ok) line << " -- " << o.failure;
    std::cout << line.str() << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
