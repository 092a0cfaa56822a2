// Copyright 2026 The MERLAN Tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes a randomized differential-testing corpus:
//
//   <out>/spec_NNN.mln             canonical MERLAN source
//   <out>/spec_NNN.py              generated agent code
//   <out>/spec_NNN_snap_MM.json    detection snapshots
//   <out>/verdicts.csv             spec,snapshot,requirement,satisfied
//
// The verdicts come from the C++ evaluator; the runtime harness compares its
// own verdicts against them.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "merlan/codegen.hpp"
#include "merlan/eval.hpp"
#include "merlan/formatter.hpp"
#include "merlan/json_io.hpp"
#include "merlan/random_corpus.hpp"

namespace fs = std::filesystem;

namespace {

std::string numbered(const char* pattern, int a, int b = 0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a randomized MERLAN corpus for differential testing", "merlan-corpus"};
  std::string out_dir = "corpus";
  int specs = 200, snapshots = 20;
  std::uint64_t seed = 1;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--specs", specs, "Number of specifications")->check(CLI::NonNegativeNumber);
  app.add_option("--snapshots", snapshots, "Snapshots per specification")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "merlan-corpus: cannot create '" << out_dir << "': " << ec.message() << "\n";
    return 2;
  }

  std::mt19937_64 rng(seed);
  std::ofstream verdicts(fs::path(out_dir) / "verdicts.csv");
  verdicts << "spec,snapshot,requirement,satisfied\n";
  for (int s = 0; s < specs; ++s) {
    auto spec = merlan::random_specification(rng);
    auto spec_name = numbered("spec_%03d", s);
    std::ofstream(fs::path(out_dir) / (spec_name + ".mln")) << merlan::format(spec);
    std::ofstream(fs::path(out_dir) / (spec_name + ".py")) << merlan::generate(spec);
    for (int k = 0; k < snapshots; ++k) {
      auto snap = merlan::random_snapshot(rng, spec);
      auto snap_name = spec_name + numbered("_snap_%02d", k) + ".json";
      std::ofstream(fs::path(out_dir) / snap_name) << merlan::snapshot_to_json(snap).dump(2) << "\n";
      for (const auto& r : merlan::evaluate_all(spec, snap)) {
        verdicts << spec_name << "," << snap_name << "," << r.requirement << "," << (r.satisfied ? "true" : "false")
                 << "\n";
      }
    }
  }
  if (!verdicts) {
    std::cerr << "merlan-corpus: failed writing corpus\n";
    return 2;
  }
  return 0;
}
