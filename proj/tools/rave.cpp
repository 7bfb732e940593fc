// Copyright 2026 The RAVE Authors
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

// rave analyze: vectorization report and Paraver trace from a rave-wire stream.
// rave gen:     synthetic rave-wire stream.
//
// Exit status: 0 success, 1 analysis or I/O error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "rave/rave.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

bool color_from_env() {
  const char* v = std::getenv("RAVE_COLOR");
  if (v == nullptr) return false;
  const std::string s(v);
  return s == "1" || s == "true" || s == "yes" || s == "on" || s == "always";
}

void print_warnings(const rave::Diagnostics& diag) {
  for (const auto& w : diag.kept()) {
    std::cerr << "warning: " << rave::to_string(w.kind);
    if (w.line) std::cerr << " at line " << *w.line;
    std::cerr << ": " << w.message << "\n";
  }
  if (diag.total() > diag.kept().size()) {
    std::cerr << "warning: " << (diag.total() - diag.kept().size()) << " more warning(s) not shown\n";
  }
}

struct AnalyzeArgs {
  std::string spec;
  std::uint64_t vlen = rave::kDefaultVlen;
  std::string input;
  std::string report, prv, log;
  bool record_scalar = false, permissive = false, start_disabled = false, split_events = false;
  std::uint64_t region_index_base = 0;
};

int run_analyze(const AnalyzeArgs& a) {
  rave::AnalyzerOptions opt;
  opt.spec = *rave::parse_spec_version(a.spec);
  opt.vlen_bits = a.vlen;
  opt.strict = !a.permissive;
  opt.record_scalar = a.record_scalar;
  opt.start_disabled = a.start_disabled;
  opt.paraver = !a.prv.empty();
  opt.split_events = a.split_events;
  opt.instruction_log = !a.log.empty();

  rave::Diagnostics diag;
  rave::Analyzer analyzer(opt, &diag);
  try {
    rave::analyze_stream(analyzer, a.input);
  } catch (...) {
    print_warnings(diag);
    throw;
  }
  print_warnings(diag);

  rave::ReportOptions ropt;
  ropt.region_index_base = a.region_index_base;
  ropt.color = color_from_env();
  const std::string text = analyzer.report(ropt);
  if (a.report.empty() || a.report == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    rave::write_file(a.report, text);
  }
  if (opt.paraver) analyzer.write_paraver(a.prv);
  if (opt.instruction_log) analyzer.write_log(a.log);
  return 0;
}

struct GenArgs {
  rave::SyntheticConfig cfg;
  std::string spec = "v1.0";
  std::string out = "-";
};

int run_gen(GenArgs g) {
  g.cfg.spec = *rave::parse_spec_version(g.spec);
  rave::validate(g.cfg);
  std::FILE* f = stdout;
  if (g.out != "-") {
    f = std::fopen(g.out.c_str(), "wb");
    if (f == nullptr) throw rave::io_error("cannot open", g.out);
  }
  std::vector<char> buf(1 << 20);
  std::setvbuf(f, buf.data(), _IOFBF, buf.size());
  rave::write_synthetic(g.cfg, f);
  const bool ok = std::fflush(f) == 0 && !std::ferror(f);
  if (f != stdout) std::fclose(f);
  else std::setvbuf(stdout, nullptr, _IOLBF, 0);
  if (!ok) throw rave::io_error("cannot write", g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vectorization analysis of RISC-V instruction streams"};
  app.require_subcommand(1);

  const auto spec_check = CLI::IsMember({"v0.7.1", "v1.0", "0.7.1", "1.0"});
  const auto vlen_check = CLI::Validator(
      [](const std::string& s) -> std::string {
        std::uint64_t v = 0;
        try {
          v = std::stoull(s);
        } catch (...) {
          return "vlen must be an integer";
        }
        return rave::valid_vlen(v) ? "" : "vlen must be a power of two >= 128";
      },
      "POW2>=128");

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a rave-wire stream");
  analyze->add_option("--spec", aa.spec, "RVV version of the stream")->required()->check(spec_check);
  analyze->add_option("--vlen", aa.vlen, "Vector register length in bits")
      ->capture_default_str()
      ->check(vlen_check);
  analyze->add_option("--input", aa.input, "Trace file, named pipe, or - for stdin")->required();
  analyze->add_option("--report", aa.report, "Report file (default: stdout)");
  analyze->add_option("--prv", aa.prv, "Write PREFIX.prv, PREFIX.pcf and PREFIX.row");
  analyze->add_option("--log", aa.log, "Write the executed vector instruction log");
  analyze->add_flag("--record-scalar", aa.record_scalar, "Per-mnemonic Paraver codes for scalar instructions");
  analyze->add_flag("--permissive", aa.permissive, "Skip malformed input with warnings instead of failing");
  analyze->add_flag("--start-disabled", aa.start_disabled, "Start with tracing disabled");
  analyze->add_flag("--split-events", aa.split_events, "One Paraver record per event");
  analyze->add_option("--region-index-base", aa.region_index_base, "Number of the first reported region")
      ->capture_default_str();

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic rave-wire stream");
  gen->add_option("--total", ga.cfg.total, "Instructions after the leading vsetvli")->required();
  gen->add_option("--vec-per-million", ga.cfg.vec_per_million, "Vector instructions per million")
      ->required();
  gen->add_option("--sew", ga.cfg.sew, "Element width")
      ->capture_default_str()
      ->check(CLI::IsMember({8u, 16u, 32u, 64u}));
  gen->add_option("--avl", ga.cfg.avl, "Application vector length")->capture_default_str();
  gen->add_option("--seed", ga.cfg.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", ga.out, "Output path or - for stdout")->capture_default_str();
  gen->add_option("--spec", ga.spec, "RVV version of the encodings")
      ->capture_default_str()
      ->check(spec_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(aa);
    return run_gen(ga);
  } catch (const rave::Error& e) {
    std::cerr << "rave: " << e.what() << "\n";
    return e.kind() == rave::ErrorKind::InvalidRatio ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "rave: " << e.what() << "\n";
    return kExitError;
  }
}
