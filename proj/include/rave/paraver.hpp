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

// Paraver trace output. Time is the index of the counted instruction; the
// trace has one node, one application, one task and one thread.
//
//   .prv  #Paraver (01/01/70 at 00:00):<end>_ns:1(1):1:1(1:1)
//         2:1:1:1:1:<t>:90000001:<code>[:90000002:<vl>:90000003:<sew>:90000004:<class>]
//         2:1:1:1:1:<t>:<event>:<value>
//   .pcf  event type and value names
//   .row  resource labels

#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "rave/isa.hpp"
#include "rave/marker_protocol.hpp"
#include "rave/metrics.hpp"
#include "rave/paraver_codes.hpp"
#include "rave/spool.hpp"
#include "rave/vector_state.hpp"

namespace rave {

inline constexpr std::uint64_t kPrvTypeInstr = 90000001;
inline constexpr std::uint64_t kPrvTypeVl = 90000002;
inline constexpr std::uint64_t kPrvTypeSew = 90000003;
inline constexpr std::uint64_t kPrvTypeClass = 90000004;

enum class VectorClassCode : std::uint8_t {
  ArithFp = 1,
  ArithInt = 2,
  MemUnit = 3,
  MemStride = 4,
  MemIndex = 5,
  Mask = 6,
  Other = 7,
};

inline VectorClassCode vector_class_code(const DecodedInstr& d) {
  switch (d.v_major) {
    case VMajor::Arith:
      return d.v_minor == VMinor::Fp ? VectorClassCode::ArithFp : VectorClassCode::ArithInt;
    case VMajor::Memory:
      return d.v_minor == VMinor::Unit     ? VectorClassCode::MemUnit
             : d.v_minor == VMinor::Stride ? VectorClassCode::MemStride
                                           : VectorClassCode::MemIndex;
    case VMajor::Mask:
      return VectorClassCode::Mask;
    case VMajor::Other:
      break;
  }
  return VectorClassCode::Other;
}

inline std::string_view to_string(VectorClassCode c) {
  switch (c) {
    case VectorClassCode::ArithFp: return "Arith FP";
    case VectorClassCode::ArithInt: return "Arith INT";
    case VectorClassCode::MemUnit: return "Mem unit-stride";
    case VectorClassCode::MemStride: return "Mem strided";
    case VectorClassCode::MemIndex: return "Mem indexed";
    case VectorClassCode::Mask: return "Mask";
    case VectorClassCode::Other: return "Other";
  }
  return "?";
}

class ParaverWriter {
 public:
  ParaverWriter(SpecVersion spec, bool split_events = false)
      : spec_(spec), split_(split_events) {}

  void on_instruction(std::uint64_t t, const DecodedInstr& d, const VectorState& s) {
    if (d.type == InstrType::Marker) return;
    note_time(t);
    codes_.insert(d.paraver_code);
    if (d.type != InstrType::Vector) {
      record(t, {{kPrvTypeInstr, d.paraver_code}});
      return;
    }
    const auto cls = vector_class_code(d);
    record(t, {{kPrvTypeInstr, d.paraver_code},
               {kPrvTypeVl, s.vl},
               {kPrvTypeSew, s.sew_bits()},
               {kPrvTypeClass, static_cast<std::uint64_t>(cls)}});
  }

  void on_user_event(const UserEvent& ev) {
    note_time(ev.instr_index);
    user_values_[ev.event_id].insert(ev.value_id);
    record(ev.instr_index, {{ev.event_id, ev.value_id}});
  }

  // Drops everything emitted so far.
  void reset() {
    body_.truncate();
    codes_.clear();
    user_values_.clear();
    end_time_ = 0;
  }

  std::uint64_t end_time() const { return end_time_; }

  std::string prv_header() const {
    return "#Paraver (01/01/70 at 00:00):" + std::to_string(end_time_) + "_ns:1(1):1:1(1:1)\n";
  }

  std::string pcf(const RegionLedger& names) const {
    std::string out =
        "DEFAULT_OPTIONS\n\n"
        "LEVEL               THREAD\n"
        "UNITS               NANOSEC\n"
        "LOOK_BACK           100\n"
        "SPEED               1\n"
        "FLAG_ICONS          ENABLED\n"
        "NUM_OF_STATE_COLORS 1000\n"
        "YMAX_SCALE          37\n\n\n"
        "DEFAULT_SEMANTIC\n\n"
        "THREAD_FUNC          State As Is\n\n\n";

    std::map<std::uint32_t, std::string_view> code_names;
    for (const auto& e : paraver_code_table(spec_)) code_names.emplace(e.code, e.mnemonic);
    out += "EVENT_TYPE\n0    " + std::to_string(kPrvTypeInstr) + "    Instruction\nVALUES\n";
    for (std::uint32_t c : codes_) {
      std::string label;
      if (c == kScalarParaverCode) label = "scalar";
      else if (auto it = code_names.find(c); it != code_names.end()) label = it->second;
      else label = std::to_string(c);
      out += std::to_string(c) + "      " + label + "\n";
    }
    out += "\n\nEVENT_TYPE\n0    " + std::to_string(kPrvTypeVl) + "    Vector length (vl)\n";
    out += "\n\nEVENT_TYPE\n0    " + std::to_string(kPrvTypeSew) + "    SEW (bits)\n";
    out += "\n\nEVENT_TYPE\n0    " + std::to_string(kPrvTypeClass) + "    Vector class\nVALUES\n";
    for (int c = 1; c <= 7; ++c) {
      out += std::to_string(c) + "      " +
             std::string(to_string(static_cast<VectorClassCode>(c))) + "\n";
    }

    // User events: everything seen in the trace plus everything named.
    std::map<std::uint64_t, std::set<std::uint64_t>> events = user_values_;
    for (const auto& [e, name] : names.event_names()) events[e];
    for (const auto& [ev, name] : names.value_names()) events[ev.first].insert(ev.second);
    for (const auto& [e, values] : events) {
      const std::string* en = names.event_name(e);
      out += "\n\nEVENT_TYPE\n0    " + std::to_string(e) + "    " +
             (en ? *en : "Event " + std::to_string(e)) + "\n";
      if (values.empty()) continue;
      out += "VALUES\n";
      for (std::uint64_t v : values) {
        const std::string* vn = names.value_name(e, v);
        out += std::to_string(v) + "      " + (vn ? *vn : v == 0 ? "End" : std::to_string(v)) + "\n";
      }
    }
    out += "\n";
    return out;
  }

  static std::string row() {
    return "LEVEL CPU SIZE 1\nCPU 1\n\n"
           "LEVEL NODE SIZE 1\nNODE 1\n\n"
           "LEVEL THREAD SIZE 1\nTHREAD 1.1.1\n";
  }

  // Writes <prefix>.prv, <prefix>.pcf and <prefix>.row.
  void finalize(const std::string& prefix, const RegionLedger& names) {
    body_.copy_to(prefix + ".prv", prv_header());
    write_file(prefix + ".pcf", pcf(names));
    write_file(prefix + ".row", row());
  }

 private:
  struct TV {
    std::uint64_t type, value;
  };

  void note_time(std::uint64_t t) {
    if (t > end_time_) end_time_ = t;
  }

  static char* put(char* p, std::uint64_t v) { return std::to_chars(p, p + 20, v).ptr; }

  void record(std::uint64_t t, std::initializer_list<TV> tvs) {
    char buf[256];
    char* p = buf;
    bool open = false;
    for (const TV& tv : tvs) {
      if (!open) {
        constexpr std::string_view kPrefix = "2:1:1:1:1:";
        p = std::copy(kPrefix.begin(), kPrefix.end(), p);
        p = put(p, t);
        open = true;
      }
      *p++ = ':';
      p = put(p, tv.type);
      *p++ = ':';
      p = put(p, tv.value);
      if (split_) {
        *p++ = '\n';
        open = false;
      }
    }
    if (open) *p++ = '\n';
    body_.write(std::string_view(buf, p - buf));
  }

  SpecVersion spec_;
  bool split_;
  Spool body_;
  std::set<std::uint32_t> codes_;
  std::map<std::uint64_t, std::set<std::uint64_t>> user_values_;
  std::uint64_t end_time_ = 0;
};

}  // namespace rave
