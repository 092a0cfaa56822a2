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

#include "merlan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "merlan/codegen.hpp"
#include "merlan/config.hpp"
#include "merlan/eval.hpp"
#include "merlan/formatter.hpp"
#include "merlan/json_io.hpp"
#include "merlan/lexer.hpp"
#include "merlan/parser.hpp"
#include "merlan/validator.hpp"

namespace merlan::cli {

namespace {

struct GlobalOptions {
  bool json = false;
  std::string config_path;
  std::string modalities;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Parsed and (unless `parse_only`) validated input file plus the exit code the
// command should use when `spec` is empty.
struct LoadedSpec {
  std::optional<Specification> spec;
  ValidationReport report;
  int comment_count = 0;
  int exit_code = kOk;
};

class Session {
 public:
  Session(GlobalOptions options, std::ostream& out, std::ostream& err)
      : options_(std::move(options)), out_(out), err_(err) {}

  bool load_config() {
    if (!options_.config_path.empty()) {
      auto text = read_file(options_.config_path);
      if (!text) {
        err_ << "merlan: cannot read config '" << options_.config_path << "'\n";
        return false;
      }
      try {
        config_ = parse_config(*text);
      } catch (const ConfigError& e) {
        err_ << options_.config_path << ": " << e.what() << "\n";
        return false;
      }
    }
    if (!options_.modalities.empty()) config_.extra_modalities = parse_modality_list(options_.modalities);
    return true;
  }

  // Parse errors and IO errors go to `diag`. In JSON mode they are collected
  // into `json_diags` instead.
  LoadedSpec load(const std::string& path, std::ostream& diag, Json* json_diags, bool parse_only = false) {
    LoadedSpec loaded;
    auto text = read_file(path);
    if (!text) {
      if (json_diags != nullptr) {
        json_diags->push_back(Json{{"code", "IO"}, {"severity", "error"}, {"message", "cannot read file"},
                                   {"line", 0}, {"column", 0}});
      } else {
        diag << "merlan: cannot read '" << path << "'\n";
      }
      loaded.exit_code = kInputError;
      return loaded;
    }
    auto lexed = tokenize(*text);
    loaded.comment_count = lexed.comment_count;
    std::vector<ParseDiagnostic> problems = lexed.diagnostics;
    std::string code = "L001";
    ParseResult parsed;
    if (lexed.ok()) {
      parsed = parse(lexed.tokens);
      problems = parsed.diagnostics;
      code = "P001";
    }
    if (!lexed.ok() || !parsed.ok()) {
      for (const auto& d : problems) {
        if (json_diags != nullptr) {
          json_diags->push_back(parse_diagnostic_to_json(d, code));
        } else {
          diag << path << ":" << d.span.line << ":" << d.span.column << ": " << to_string(d.severity) << "[" << code
               << "]: " << d.message << "\n";
        }
      }
      loaded.exit_code = kInputError;
      return loaded;
    }
    if (!parse_only) {
      loaded.report = validate(parsed.spec, config_);
      for (const auto& d : loaded.report.diagnostics) {
        if (json_diags != nullptr) {
          json_diags->push_back(diagnostic_to_json(d));
        } else {
          diag << path << ":" << d.span.line << ":" << d.span.column << ": " << to_string(d.severity) << "["
               << d.code << "]: " << d.message << "\n";
        }
      }
      if (!loaded.report.ok) loaded.exit_code = kSemanticError;
    }
    loaded.spec = std::move(parsed.spec);
    return loaded;
  }

  int check(const std::string& path) {
    Json diags = Json::array();
    auto loaded = load(path, out_, options_.json ? &diags : nullptr);
    bool ok = loaded.exit_code == kOk;
    if (options_.json) {
      Json doc{{"schema_version", std::string(kSchemaVersion)}, {"file", path}, {"ok", ok}, {"diagnostics", diags}};
      out_ << doc.dump(2) << "\n";
    } else if (loaded.spec) {
      auto errors = std::count_if(loaded.report.diagnostics.begin(), loaded.report.diagnostics.end(),
                                  [](const Diagnostic& d) { return d.severity == Severity::Error; });
      auto warnings = std::count_if(loaded.report.diagnostics.begin(), loaded.report.diagnostics.end(),
                                    [](const Diagnostic& d) { return d.severity == Severity::Warning; });
      out_ << path << ": " << (ok ? "ok" : "failed") << " (" << errors << " error(s), " << warnings
           << " warning(s))\n";
    }
    return loaded.exit_code;
  }

  struct EvalOptions {
    std::string spec_path;
    std::vector<std::string> snapshot_paths;
    std::string requirement;
    bool trace = false;
    bool fail_unsatisfied = false;
    int jobs = 1;
  };

  int eval(const EvalOptions& opts) {
    auto loaded = load(opts.spec_path, err_, nullptr);
    if (!loaded.spec) return loaded.exit_code;
    if (loaded.exit_code != kOk) return loaded.exit_code;
    const auto& spec = *loaded.spec;
    if (!opts.requirement.empty() && spec.find_requirement(opts.requirement) == nullptr) {
      err_ << "merlan: unknown requirement '" << opts.requirement << "'\n";
      return kSemanticError;
    }

    std::vector<DetectionSnapshot> snapshots;
    for (const auto& path : opts.snapshot_paths) {
      auto text = read_file(path);
      if (!text) {
        err_ << "merlan: cannot read '" << path << "'\n";
        return kInputError;
      }
      try {
        snapshots.push_back(parse_snapshot(*text));
      } catch (const SchemaError& e) {
        err_ << path << ": schema error at " << e.what() << "\n";
        return kInputError;
      }
    }

    std::vector<std::vector<MatchResult>> results;
    try {
      results = evaluate_batch(spec, snapshots, opts.jobs);
    } catch (const std::exception& e) {
      err_ << "merlan: evaluation failed: " << e.what() << "\n";
      return kSemanticError;
    }

    bool all_satisfied = true;
    for (auto& per_snapshot : results) {
      if (!opts.requirement.empty()) {
        std::erase_if(per_snapshot, [&](const MatchResult& r) { return r.requirement != opts.requirement; });
      }
      for (const auto& r : per_snapshot) all_satisfied = all_satisfied && r.satisfied;
    }

    Json doc{{"schema_version", std::string(kSchemaVersion)}};
    if (results.size() == 1) {
      doc["results"] = results_to_json(results.front(), opts.trace);
    } else {
      Json list = Json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        list.push_back(Json{{"snapshot", opts.snapshot_paths[i]}, {"results", results_to_json(results[i], opts.trace)}});
      }
      doc["snapshots"] = std::move(list);
    }
    out_ << doc.dump(2) << "\n";
    return opts.fail_unsatisfied && !all_satisfied ? kUnsatisfied : kOk;
  }

  int gen(const std::string& spec_path, const std::string& out_path, const std::string& manifest_path) {
    auto loaded = load(spec_path, err_, nullptr);
    if (!loaded.spec || loaded.exit_code != kOk) return loaded.exit_code;
    GeneratedCode generated;
    try {
      generated = generate_with_manifest(*loaded.spec);
    } catch (const GenError& e) {
      err_ << "merlan: " << e.what() << "\n";
      return kSemanticError;
    }
    if (out_path.empty()) {
      out_ << generated.code;
    } else if (!write_file(out_path, generated.code)) {
      err_ << "merlan: cannot write '" << out_path << "'\n";
      return kInputError;
    }
    if (!manifest_path.empty() && !write_file(manifest_path, manifest_to_json(generated.manifest).dump(2) + "\n")) {
      err_ << "merlan: cannot write '" << manifest_path << "'\n";
      return kInputError;
    }
    return kOk;
  }

  int fmt(const std::string& path, bool check, bool to_stdout, bool force) {
    auto loaded = load(path, err_, nullptr, /*parse_only=*/true);
    if (!loaded.spec) return loaded.exit_code;
    auto original = *read_file(path);
    auto formatted = format(*loaded.spec);
    if (check) {
      auto diff = line_diff(original, formatted, path);
      if (diff.empty()) return kOk;
      out_ << diff;
      return kFormatDiff;
    }
    if (to_stdout) {
      out_ << formatted;
      return kOk;
    }
    if (original == formatted) return kOk;
    if (loaded.comment_count > 0 && !force) {
      err_ << path << ": contains comments, which formatting would drop; use --stdout to preview or --force\n";
      return kInputError;
    }
    if (!write_file(path, formatted)) {
      err_ << "merlan: cannot write '" << path << "'\n";
      return kInputError;
    }
    return kOk;
  }

 private:
  GlobalOptions options_;
  Config config_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

std::string line_diff(const std::string& before, const std::string& after, const std::string& label) {
  if (before == after) return {};
  auto a = split_lines(before);
  auto b = split_lines(after);
  // Longest common subsequence table, suffix form.
  std::vector<std::vector<int>> lcs(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::string out = "--- " + label + "\n+++ " + label + " (formatted)\n";
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      out += " " + a[i] + "\n";
      ++i;
      ++j;
    } else if (i < a.size() && (j == b.size() || lcs[i + 1][j] >= lcs[i][j + 1])) {
      out += "-" + a[i++] + "\n";
    } else {
      out += "+" + b[j++] + "\n";
    }
  }
  if (a == b) out += "-(line endings or trailing newline differ)\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MERLAN multimodal requirements toolkit", "merlan"};
  app.require_subcommand(1);

  GlobalOptions globals;
  app.add_flag("--json", globals.json, "Machine-readable diagnostics");
  app.add_option("--config", globals.config_path, "Configuration file (key = value lines)");
  app.add_option("--modalities", globals.modalities, "Extra modality names, comma separated (overrides config)");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Parse and validate a specification");
  check->add_option("spec", check_path, "MERLAN source file")->required();
  check->fallthrough();

  Session::EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate requirements against detection snapshots");
  eval->add_option("spec", eval_opts.spec_path, "MERLAN source file")->required();
  eval->add_option("snapshots", eval_opts.snapshot_paths, "Snapshot JSON files")->required();
  eval->add_option("--requirement", eval_opts.requirement, "Only report this requirement");
  eval->add_flag("--trace", eval_opts.trace, "Include the evaluation trace");
  eval->add_flag("--fail-unsatisfied", eval_opts.fail_unsatisfied, "Exit 3 when a requirement is unsatisfied");
  eval->add_option("--jobs", eval_opts.jobs, "Evaluate snapshots on N threads")->check(CLI::PositiveNumber);
  eval->fallthrough();

  std::string gen_path, gen_out, gen_manifest;
  auto* gen = app.add_subcommand("gen", "Generate agent code");
  gen->add_option("spec", gen_path, "MERLAN source file")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");
  gen->add_option("--manifest", gen_manifest, "Also write a JSON manifest");
  gen->fallthrough();

  std::string fmt_path;
  bool fmt_check = false, fmt_stdout = false, fmt_force = false;
  auto* fmt = app.add_subcommand("fmt", "Rewrite a specification in canonical form");
  fmt->add_option("spec", fmt_path, "MERLAN source file")->required();
  fmt->add_flag("--check", fmt_check, "Print a diff and exit 4 instead of writing");
  fmt->add_flag("--stdout", fmt_stdout, "Print the formatted text instead of writing");
  fmt->add_flag("--force", fmt_force, "Rewrite even if comments would be lost");
  fmt->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Session session(globals, out, err);
  if (!session.load_config()) return kInputError;
  if (*check) return session.check(check_path);
  if (*eval) return session.eval(eval_opts);
  if (*gen) return session.gen(gen_path, gen_out, gen_manifest);
  return session.fmt(fmt_path, fmt_check, fmt_stdout, fmt_force);
}

}  // namespace merlan::cli
