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

// Vectorization counters, region bookkeeping and derived metrics.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rave/error.hpp"
#include "rave/isa.hpp"
#include "rave/marker_protocol.hpp"
#include "rave/vector_state.hpp"

namespace rave {

using BucketArray = std::array<std::uint64_t, kSewBuckets>;

struct MetricCounters {
  std::uint64_t scalar_instr = 0;
  std::uint64_t vsetvl_instr = 0;
  BucketArray vector_instr{};
  BucketArray vunit_instr{};
  BucketArray vstride_instr{};
  BucketArray vidx_instr{};
  BucketArray vfp_instr{};
  BucketArray vint_instr{};
  BucketArray vmask_instr{};
  BucketArray velem{};

  std::uint64_t vector_total() const {
    std::uint64_t n = 0;
    for (auto v : vector_instr) n += v;
    return n;
  }
  std::uint64_t total() const { return scalar_instr + vsetvl_instr + vector_total(); }
  std::uint64_t arith(unsigned s) const { return vfp_instr[s] + vint_instr[s]; }
  std::uint64_t mem(unsigned s) const { return vunit_instr[s] + vstride_instr[s] + vidx_instr[s]; }
  // Remainder of the bucket: the OTHER class.
  std::uint64_t other(unsigned s) const {
    return vector_instr[s] - arith(s) - mem(s) - vmask_instr[s];
  }

  template <typename F>
  void for_each_field(const MetricCounters& o, F&& f) {
    f(scalar_instr, o.scalar_instr);
    f(vsetvl_instr, o.vsetvl_instr);
    for (unsigned s = 0; s < kSewBuckets; ++s) {
      f(vector_instr[s], o.vector_instr[s]);
      f(vunit_instr[s], o.vunit_instr[s]);
      f(vstride_instr[s], o.vstride_instr[s]);
      f(vidx_instr[s], o.vidx_instr[s]);
      f(vfp_instr[s], o.vfp_instr[s]);
      f(vint_instr[s], o.vint_instr[s]);
      f(vmask_instr[s], o.vmask_instr[s]);
      f(velem[s], o.velem[s]);
    }
  }

  MetricCounters& operator+=(const MetricCounters& o) {
    for_each_field(o, [](std::uint64_t& a, std::uint64_t b) { a += b; });
    return *this;
  }
  MetricCounters& operator-=(const MetricCounters& o) {
    for_each_field(o, [](std::uint64_t& a, std::uint64_t b) { a -= b; });
    return *this;
  }
  friend MetricCounters operator+(MetricCounters a, const MetricCounters& b) { return a += b; }
  friend MetricCounters operator-(MetricCounters a, const MetricCounters& b) { return a -= b; }
  friend bool operator==(const MetricCounters&, const MetricCounters&) = default;
};

// Counts one executed instruction. A VECTOR instruction under vill throws
// VectorStateUnknown in strict mode; otherwise it is counted in the bucket of
// the last valid SEW.
inline void count_instruction(MetricCounters& c, const DecodedInstr& instr,
                              const VectorState& state, bool strict = true,
                              Diagnostics* diag = nullptr) {
  switch (instr.type) {
    case InstrType::Scalar:
      ++c.scalar_instr;
      return;
    case InstrType::Vsetvl:
      ++c.vsetvl_instr;
      return;
    case InstrType::Marker:
      return;
    case InstrType::Vector:
      break;
  }
  if (state.vill()) {
    const std::string msg = "vector instruction " + instr.asm_string + " executed with vill set";
    if (strict) throw Error(ErrorKind::VectorStateUnknown, msg);
    if (diag) diag->warn(ErrorKind::VectorStateUnknown, msg);
  }
  const unsigned s = sew_bucket(state.sew_bits());
  ++c.vector_instr[s];
  c.velem[s] += state.vl;
  switch (instr.v_major) {
    case VMajor::Arith:
      ++(instr.v_minor == VMinor::Fp ? c.vfp_instr : c.vint_instr)[s];
      break;
    case VMajor::Memory:
      ++(instr.v_minor == VMinor::Unit     ? c.vunit_instr
         : instr.v_minor == VMinor::Stride ? c.vstride_instr
                                           : c.vidx_instr)[s];
      break;
    case VMajor::Mask:
      ++c.vmask_instr[s];
      break;
    case VMajor::Other:
      break;
  }
}

struct Region {
  std::uint64_t event_id = 0;
  std::uint64_t open_value = 0;
  std::optional<std::uint64_t> close_value;
  MetricCounters start_snapshot;
  std::optional<MetricCounters> delta;
  std::uint64_t open_index = 0;
  std::optional<std::uint64_t> close_index;
  // Some of the span ran with tracing disabled.
  bool partial = false;
};

class RegionLedger {
 public:
  // value != 0 closes the open region of the event (if any) and opens a new
  // one; value == 0 only closes.
  void on_user_event(const UserEvent& ev, const MetricCounters& now, bool tracing_enabled = true,
                     Diagnostics* diag = nullptr) {
    auto it = open_.find(ev.event_id);
    if (it != open_.end()) {
      Region r = std::move(it->second);
      open_.erase(it);
      r.close_value = ev.value_id;
      r.close_index = ev.instr_index;
      r.delta = now - r.start_snapshot;
      r.partial = r.partial || !tracing_enabled;
      completed_.push_back(std::move(r));
    } else if (ev.value_id == 0) {
      if (diag) {
        diag->warn(ErrorKind::CloseWithoutOpen,
                   "event " + std::to_string(ev.event_id) + " closed with no open region");
      }
      return;
    }
    if (ev.value_id != 0) {
      Region r;
      r.event_id = ev.event_id;
      r.open_value = ev.value_id;
      r.start_snapshot = now;
      r.open_index = ev.instr_index;
      r.partial = !tracing_enabled;
      open_.emplace(ev.event_id, std::move(r));
    }
  }

  // Tracing stopped: every open region loses part of its span.
  void mark_open_partial() {
    for (auto& [id, r] : open_) r.partial = true;
  }

  void name_event(std::uint64_t event_id, std::string name) {
    event_names_[event_id] = std::move(name);
  }
  void name_value(std::uint64_t event_id, std::uint64_t value_id, std::string name) {
    value_names_[{event_id, value_id}] = std::move(name);
  }

  // Discards all regions; names survive.
  void reset() {
    open_.clear();
    completed_.clear();
  }

  const std::vector<Region>& completed() const { return completed_; }
  const std::map<std::uint64_t, Region>& open_regions() const { return open_; }

  const std::string* event_name(std::uint64_t e) const {
    auto it = event_names_.find(e);
    return it == event_names_.end() ? nullptr : &it->second;
  }
  const std::string* value_name(std::uint64_t e, std::uint64_t v) const {
    auto it = value_names_.find({e, v});
    return it == value_names_.end() ? nullptr : &it->second;
  }
  const std::map<std::uint64_t, std::string>& event_names() const { return event_names_; }
  const std::map<std::pair<std::uint64_t, std::uint64_t>, std::string>& value_names() const {
    return value_names_;
  }

 private:
  std::map<std::uint64_t, Region> open_;
  std::vector<Region> completed_;
  std::map<std::uint64_t, std::string> event_names_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::string> value_names_;
};

// Exact ratio num/den scaled by 10^decimals, rounded half away from zero.
// Empty when den == 0.
inline std::optional<std::uint64_t> scaled_ratio(std::uint64_t num, std::uint64_t den,
                                                 unsigned scale) {
  if (den == 0) return std::nullopt;
  const unsigned __int128 n = static_cast<unsigned __int128>(num) * scale;
  return static_cast<std::uint64_t>((n * 2 + den) / (static_cast<unsigned __int128>(den) * 2));
}

// "40.69" for a percentage, or empty.
inline std::optional<std::string> format_fixed2(std::optional<std::uint64_t> hundredths) {
  if (!hundredths) return std::nullopt;
  const std::uint64_t v = *hundredths;
  std::string frac = std::to_string(v % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(v / 100) + "." + frac;
}

inline std::optional<std::string> percent_text(std::uint64_t num, std::uint64_t den) {
  return format_fixed2(scaled_ratio(num, den, 10000));
}

inline std::optional<std::string> ratio_text(std::uint64_t num, std::uint64_t den) {
  return format_fixed2(scaled_ratio(num, den, 100));
}

struct BucketMetrics {
  std::optional<double> vector_pct;  // of total instructions
  std::optional<double> avg_vl;
  std::optional<double> arith_pct, mem_pct, mask_pct, other_pct;  // of vector_instr
  std::optional<double> fp_pct, int_pct;                          // of arith
  std::optional<double> unit_pct, stride_pct, idx_pct;           // of mem
};

struct DerivedMetrics {
  std::uint64_t total = 0;
  std::optional<double> vector_mix;  // fraction, 0..1
  std::optional<double> scalar_pct, vsetvl_pct, vector_pct;
  std::array<BucketMetrics, kSewBuckets> buckets;
};

inline std::optional<double> ratio(std::uint64_t num, std::uint64_t den, double scale = 1.0) {
  if (den == 0) return std::nullopt;
  return scale * static_cast<double>(num) / static_cast<double>(den);
}

inline DerivedMetrics derived_metrics(const MetricCounters& c) {
  DerivedMetrics d;
  d.total = c.total();
  d.vector_mix = ratio(c.vector_total(), d.total);
  d.scalar_pct = ratio(c.scalar_instr, d.total, 100);
  d.vsetvl_pct = ratio(c.vsetvl_instr, d.total, 100);
  d.vector_pct = ratio(c.vector_total(), d.total, 100);
  for (unsigned s = 0; s < kSewBuckets; ++s) {
    auto& b = d.buckets[s];
    const std::uint64_t v = c.vector_instr[s];
    b.vector_pct = ratio(v, d.total, 100);
    b.avg_vl = ratio(c.velem[s], v);
    b.arith_pct = ratio(c.arith(s), v, 100);
    b.mem_pct = ratio(c.mem(s), v, 100);
    b.mask_pct = ratio(c.vmask_instr[s], v, 100);
    b.other_pct = ratio(c.other(s), v, 100);
    b.fp_pct = ratio(c.vfp_instr[s], c.arith(s), 100);
    b.int_pct = ratio(c.vint_instr[s], c.arith(s), 100);
    b.unit_pct = ratio(c.vunit_instr[s], c.mem(s), 100);
    b.stride_pct = ratio(c.vstride_instr[s], c.mem(s), 100);
    b.idx_pct = ratio(c.vidx_instr[s], c.mem(s), 100);
  }
  return d;
}

}  // namespace rave
