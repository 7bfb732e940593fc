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

// Stream analysis: decode, architectural state, markers, counters and
// outputs, one record at a time.

#pragma once

#include <cstdint>
#include <charconv>
#include <cstdio>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "rave/decode.hpp"
#include "rave/error.hpp"
#include "rave/marker_protocol.hpp"
#include "rave/metrics.hpp"
#include "rave/paraver.hpp"
#include "rave/report.hpp"
#include "rave/spool.hpp"
#include "rave/trace_io.hpp"
#include "rave/vector_state.hpp"

namespace rave {

struct AnalyzerOptions {
  SpecVersion spec = SpecVersion::V1_0;
  std::uint64_t vlen_bits = kDefaultVlen;
  bool strict = true;
  bool record_scalar = false;
  bool start_disabled = false;
  bool paraver = false;          // collect .prv events
  bool split_events = false;
  bool instruction_log = false;  // collect the vector instruction log
};

// Tab-separated log of executed vector instructions.
inline constexpr std::string_view kLogHeader =
    "index\tpc\tasm\tvl\tsew\tlmul\tdst\tsrc1\tsrc2\tsrc3\n";

class Analyzer {
 public:
  explicit Analyzer(const AnalyzerOptions& opt, Diagnostics* diag = nullptr)
      : opt_(opt),
        diag_(diag ? diag : &own_diag_),
        protocol_(!opt.start_disabled, opt.strict, diag_) {
    if (!valid_vlen(opt.vlen_bits)) {
      throw Error(ErrorKind::InvalidConfig,
                  "vlen must be a power of two >= 128, got " + std::to_string(opt.vlen_bits));
    }
    state_.vlen_bits = opt.vlen_bits;
    if (opt.paraver) paraver_ = std::make_unique<ParaverWriter>(opt.spec, opt.split_events);
    if (opt.instruction_log) log_ = std::make_unique<Spool>();
  }
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  // Processes one executed instruction. `line` locates errors.
  void process(const TraceRecord& rec, std::optional<std::uint64_t> line = std::nullopt) {
    try {
      step(rec, line);
    } catch (const Error& e) {
      throw line ? e.at(*line) : e;
    }
  }

  // End of stream: flushes the marker state machine and reports regions
  // that were never closed.
  void finish() {
    protocol_.finish();
    for (const auto& [id, r] : ledger_.open_regions()) {
      diag_->warn(ErrorKind::CloseWithoutOpen,
                  "region of event " + std::to_string(id) + " (value " +
                      std::to_string(r.open_value) + ") still open at end of stream; not reported");
    }
  }

  const MetricCounters& counters() const { return counters_; }
  const RegionLedger& ledger() const { return ledger_; }
  const VectorState& state() const { return state_; }
  bool tracing_enabled() const { return protocol_.tracing_enabled(); }
  // Counted instructions since the start or the last restart.
  std::uint64_t index() const { return index_; }
  std::uint64_t records() const { return records_; }
  std::size_t decode_cache_size() const { return cache_.size(); }
  Diagnostics& diagnostics() { return *diag_; }
  const AnalyzerOptions& options() const { return opt_; }

  std::string report(const ReportOptions& ropt = {}) const {
    return render_report(ledger_, counters_, ropt);
  }

  void write_paraver(const std::string& prefix) {
    if (!paraver_) throw Error(ErrorKind::InvalidConfig, "Paraver output was not enabled");
    paraver_->finalize(prefix, ledger_);
  }

  void write_log(const std::string& path) {
    if (!log_) throw Error(ErrorKind::InvalidConfig, "instruction log was not enabled");
    log_->copy_to(path, kLogHeader);
  }

 private:
  struct Key {
    std::uint64_t pc;
    std::uint32_t raw;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.pc * 0x9e3779b97f4a7c15ull ^ k.raw);
    }
  };

  // Translate once, execute many: decoding is cached per (pc, raw).
  const DecodedInstr& lookup(const TraceRecord& rec) {
    const Key key{rec.pc, rec.raw};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    DecodedInstr d;
    try {
      d = decode(rec.raw, rec.pc, opt_.spec, {opt_.record_scalar});
    } catch (const Error& e) {
      if (opt_.strict || e.kind() != ErrorKind::UndecodableEncoding) throw;
      diag_->warn(e.kind(), e.message() + "; counted as scalar");
      d = DecodedInstr{};
      d.pc = rec.pc;
      d.raw = rec.raw;
      d.length = (rec.raw & 3) == 3 ? 4 : 2;
      d.type = InstrType::Scalar;
      d.paraver_code = kScalarParaverCode;
    }
    return cache_.emplace(key, std::move(d)).first->second;
  }

  void step(const TraceRecord& rec, std::optional<std::uint64_t> line) {
    ++records_;
    const DecodedInstr& d = lookup(rec);
    if (d.unknown_marker_immediate) {
      diag_->warn(ErrorKind::UnknownMarkerImmediate,
                  "addi x0 with immediate outside the marker codes at pc 0x" + hex(rec.pc) +
                      "; counted as scalar",
                  line);
    }
    if (d.marker) {
      on_marker(d, rec, line);
      return;
    }
    if (d.type == InstrType::Vsetvl) {
      state_ = apply_vsetvl(state_, d, {rec.rs1_value, rec.rs2_value}, opt_.spec, opt_.strict,
                            diag_);
    }
    if (!protocol_.tracing_enabled()) return;
    count_instruction(counters_, d, state_, opt_.strict, diag_);
    if (paraver_) paraver_->on_instruction(index_, d, state_);
    if (log_ && d.type == InstrType::Vector) log_vector(d);
    ++index_;
  }

  void on_marker(const DecodedInstr& d, const TraceRecord& rec, std::optional<std::uint64_t> line) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> regs;
    if (rec.rs1_value && rec.rs2_value) regs.emplace(*rec.rs1_value, *rec.rs2_value);
    ProtocolAction a = protocol_.on_marker(*d.marker, regs, index_, line);
    if (auto* ev = std::get_if<UserEvent>(&a)) {
      const bool on = protocol_.tracing_enabled();
      ledger_.on_user_event(*ev, counters_, on, diag_);
      if (on && paraver_) paraver_->on_user_event(*ev);
    } else if (auto* ne = std::get_if<NameEvent>(&a)) {
      ledger_.name_event(ne->event_id, std::move(ne->name));
    } else if (auto* nv = std::get_if<NameValue>(&a)) {
      ledger_.name_value(nv->event_id, nv->value_id, std::move(nv->name));
    } else if (auto* t = std::get_if<TraceToggle>(&a)) {
      if (!t->enabled) ledger_.mark_open_partial();
    } else if (std::holds_alternative<ResetAction>(a)) {
      counters_ = {};
      ledger_.reset();
      if (paraver_) paraver_->reset();
      if (log_) log_->truncate();
      index_ = 0;
    }
  }

  void log_vector(const DecodedInstr& d) {
    std::string s = std::to_string(index_);
    s += "\t0x" + hex(d.pc) + "\t" + d.asm_string + "\t" + std::to_string(state_.vl) + "\t" +
         std::to_string(state_.sew_bits()) + "\t" + state_.lmul_text();
    for (const RegRef* r : {&d.dst, &d.src1, &d.src2, &d.src3}) s += "\t" + to_string(*r);
    s += '\n';
    log_->write(s);
  }

  static std::string hex(std::uint64_t v) {
    char buf[17];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
    return std::string(buf, p);
  }

  AnalyzerOptions opt_;
  Diagnostics own_diag_;
  Diagnostics* diag_;
  MarkerProtocol protocol_;
  VectorState state_;
  MetricCounters counters_;
  RegionLedger ledger_;
  std::unique_ptr<ParaverWriter> paraver_;
  std::unique_ptr<Spool> log_;
  std::unordered_map<Key, DecodedInstr, KeyHash> cache_;
  std::uint64_t index_ = 0;
  std::uint64_t records_ = 0;
};

// Runs `a` over the rave-wire stream at `path` ("-" for stdin) with the
// parser on its own thread. Parser warnings are forwarded to the analyzer's
// diagnostics. Throws on the first fatal error.
inline void analyze_stream(Analyzer& a, const std::string& path) {
  ParserThread parser(path, a.options().strict);
  while (auto batch = parser.next()) {
    for (const Warning& w : batch->warnings) a.diagnostics().warn(w.kind, w.message, w.line);
    for (const NumberedRecord& r : batch->records) a.process(r.record, r.line);
    if (batch->error) std::rethrow_exception(batch->error);
  }
  a.finish();
}

}  // namespace rave
