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

// Test-only encoders and reference models. Written from the ISA manuals,
// independently of the decoder under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rave/analyzer.hpp"
#include "rave/instrument.h"
#include "rave/isa.hpp"
#include "rave/trace_io.hpp"

namespace rave::test {

namespace enc {

constexpr std::uint32_t kOpV = 0x57;

// vtype immediates
constexpr std::uint32_t vtype_v1(unsigned sew, int lmul_log2, bool ta = true, bool ma = true) {
  const unsigned vsew = sew == 8 ? 0 : sew == 16 ? 1 : sew == 32 ? 2 : 3;
  const unsigned vlmul = static_cast<unsigned>(lmul_log2) & 7;
  return (ma ? 0x80u : 0) | (ta ? 0x40u : 0) | (vsew << 3) | vlmul;
}
constexpr std::uint32_t vtype_v071(unsigned sew, unsigned lmul_log2) {
  const unsigned vsew = sew == 8 ? 0 : sew == 16 ? 1 : sew == 32 ? 2 : 3;
  return (vsew << 2) | (lmul_log2 & 3);
}
inline std::uint32_t vtype_for(SpecVersion spec, unsigned sew, int lmul_log2 = 0) {
  return spec == SpecVersion::V1_0 ? vtype_v1(sew, lmul_log2)
                                   : vtype_v071(sew, static_cast<unsigned>(lmul_log2));
}

constexpr std::uint32_t vsetvli(unsigned rd, unsigned rs1, std::uint32_t vtypei) {
  return ((vtypei & 0x7ff) << 20) | (rs1 << 15) | (7u << 12) | (rd << 7) | kOpV;
}
constexpr std::uint32_t vsetivli(unsigned rd, unsigned uimm, std::uint32_t vtypei) {
  return (3u << 30) | ((vtypei & 0x3ff) << 20) | ((uimm & 31) << 15) | (7u << 12) | (rd << 7) |
         kOpV;
}
constexpr std::uint32_t vsetvl(unsigned rd, unsigned rs1, unsigned rs2) {
  return (1u << 31) | (rs2 << 20) | (rs1 << 15) | (7u << 12) | (rd << 7) | kOpV;
}

// OPIVV/OPFVV/OPMVV with vm=1.
constexpr std::uint32_t opv(unsigned funct6, unsigned funct3, unsigned vd, unsigned vs2,
                            unsigned vs1) {
  return (funct6 << 26) | (1u << 25) | (vs2 << 20) | (vs1 << 15) | (funct3 << 12) | (vd << 7) |
         kOpV;
}
constexpr std::uint32_t vadd_vv(unsigned vd, unsigned vs2, unsigned vs1) {
  return opv(0x00, 0, vd, vs2, vs1);
}
constexpr std::uint32_t vfmul_vv(unsigned vd, unsigned vs2, unsigned vs1) {
  return opv(0x24, 1, vd, vs2, vs1);
}
constexpr std::uint32_t vmand_mm(unsigned vd, unsigned vs2, unsigned vs1) {
  return opv(0x19, 2, vd, vs2, vs1);
}
constexpr std::uint32_t vslidedown_vx(unsigned vd, unsigned vs2, unsigned rs1) {
  return opv(0x0f, 4, vd, vs2, rs1);
}

// Unit-stride, strided and indexed-ordered 64-bit element loads and stores.
// Valid under both spec versions.
constexpr std::uint32_t vle64(unsigned vd, unsigned rs1) {
  return (1u << 25) | (rs1 << 15) | (7u << 12) | (vd << 7) | 0x07;
}
constexpr std::uint32_t vse64(unsigned vs3, unsigned rs1) {
  return (1u << 25) | (rs1 << 15) | (7u << 12) | (vs3 << 7) | 0x27;
}
constexpr std::uint32_t vlse64(unsigned vd, unsigned rs1, unsigned rs2) {
  return (2u << 26) | (1u << 25) | (rs2 << 20) | (rs1 << 15) | (7u << 12) | (vd << 7) | 0x07;
}
constexpr std::uint32_t vloxei64(unsigned vd, unsigned rs1, unsigned vs2) {
  return (3u << 26) | (1u << 25) | (vs2 << 20) | (rs1 << 15) | (7u << 12) | (vd << 7) | 0x07;
}

constexpr std::uint32_t addi(unsigned rd, unsigned rs1, int imm) {
  return (static_cast<std::uint32_t>(imm & 0xfff) << 20) | (rs1 << 15) | (rd << 7) | 0x13;
}

}  // namespace enc

// Functional vsetvl model in the style of an instruction-set simulator:
// vtype fields are pulled straight from the immediate and VLMAX is computed as
// VLEN >> (log2(SEW) - lmul_log2).
struct RefVsetvl {
  bool vill;
  std::uint64_t vl;
  unsigned sew;
};

inline RefVsetvl ref_vsetvl(SpecVersion spec, std::uint64_t vlen, std::uint64_t vtype,
                            std::uint64_t avl) {
  unsigned vsew, vlmul;
  bool reserved;
  if (spec == SpecVersion::V1_0) {
    vlmul = vtype & 7;
    vsew = (vtype >> 3) & 7;
    reserved = (vtype >> 8) != 0 || vlmul == 4;
  } else {
    vlmul = vtype & 3;
    vsew = (vtype >> 2) & 7;
    reserved = (vtype >> 5) != 0;  // ediv and above
  }
  if (vsew > 3 || reserved) return {true, 0, 0};
  const unsigned sew = 8u << vsew;
  int lmul_log2 = static_cast<int>(vlmul);
  if (spec == SpecVersion::V1_0 && vlmul >= 5) {
    lmul_log2 = static_cast<int>(vlmul) - 8;
    if (sew > (64u >> -lmul_log2)) return {true, 0, 0};
  }
  int log2sew = 3 + static_cast<int>(vsew);
  int shift = log2sew - lmul_log2;
  std::uint64_t vlmax = vlen >> shift;
  return {false, std::min(avl, vlmax), sew};
}

// Builds rave-wire record sequences the way an instrumented guest would
// execute them. Every instruction gets its own pc.
class StreamBuilder {
 public:
  explicit StreamBuilder(SpecVersion spec = SpecVersion::V1_0) : spec_(spec) {}

  StreamBuilder& raw(std::uint32_t w, std::optional<std::uint64_t> rs1 = {},
                     std::optional<std::uint64_t> rs2 = {}) {
    records_.push_back({pc_, w, rs1, rs2});
    pc_ += (w & 3) == 3 ? 4 : 2;
    return *this;
  }
  StreamBuilder& scalar(unsigned n = 1) {
    for (unsigned i = 0; i < n; ++i) raw(enc::addi(12, 12, 1));
    return *this;
  }
  StreamBuilder& vsetvli(std::uint64_t avl, unsigned sew, int lmul_log2 = 0) {
    return raw(enc::vsetvli(10, 11, enc::vtype_for(spec_, sew, lmul_log2)), avl);
  }
  StreamBuilder& vadd(unsigned n = 1) {
    for (unsigned i = 0; i < n; ++i) raw(enc::vadd_vv(1, 2, 3));
    return *this;
  }
  StreamBuilder& event(std::uint64_t e, std::uint64_t v) { return raw(rave_enc_or_x0(10, 11), e, v); }
  StreamBuilder& name_event(std::uint32_t e, const std::string& s) { return name(e, false, 0, s); }
  StreamBuilder& name_value(std::uint32_t e, std::uint32_t v, const std::string& s) {
    return name(e, true, v, s);
  }
  StreamBuilder& start() { return raw(rave_enc_start_trace()); }
  StreamBuilder& stop() { return raw(rave_enc_stop_trace()); }
  StreamBuilder& restart() { return raw(rave_enc_restart_trace()); }

  const std::vector<TraceRecord>& records() const { return records_; }
  std::string text() const {
    std::string out = "# rave-wire v1\n";
    for (const auto& r : records_) out += format_record(r) + "\n";
    return out;
  }

 private:
  StreamBuilder& name(std::uint32_t e, bool has_v, std::uint32_t v, const std::string& s) {
    std::vector<std::uint32_t> w(rave_encode_name(e, has_v, v, s.c_str(), nullptr, 0));
    rave_encode_name(e, has_v, v, s.c_str(), w.data(), w.size());
    for (std::uint32_t x : w) raw(x);
    return *this;
  }

  SpecVersion spec_;
  std::uint64_t pc_ = 0x10000;
  std::vector<TraceRecord> records_;
};

inline void feed(Analyzer& a, const std::vector<TraceRecord>& records) {
  std::uint64_t line = 1;
  for (const auto& r : records) a.process(r, ++line);
  a.finish();
}

}  // namespace rave::test
