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

// Instruction decoding entry points.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rave/detail/scalar_decode.hpp"
#include "rave/detail/vector_decode.hpp"
#include "rave/error.hpp"
#include "rave/isa.hpp"
#include "rave/paraver_codes.hpp"

namespace rave {

struct DecodeOptions {
  // Fully decode scalar instructions (mnemonic, registers, text).
  bool record_scalar = false;
};

// Shared instruction-class value for scalar instructions outside detail mode.
inline constexpr std::uint32_t kScalarParaverCode = 1;

namespace detail {

inline std::string hex32(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%08x", v);
  return buf;
}

// Marker patterns: canonical 32-bit writes to x0 only.
inline bool decode_marker(std::uint32_t raw, DecodedInstr& out) {
  if ((raw & 0x000fffff) == 0x00000013) {  // addi x0, x0, imm
    const std::int64_t imm = sext(raw >> 20, 12);
    if (imm >= -4 && imm <= -1) {
      out.type = InstrType::Marker;
      out.mnemonic = "li";
      out.asm_string = "li x0, " + std::to_string(imm);
      switch (imm) {
        case -3: out.marker = marker::StartTrace{}; break;
        case -4: out.marker = marker::StopTrace{}; break;
        case -2: out.marker = marker::RestartTrace{}; break;
        default: out.marker = marker::NameDelimiter{}; break;
      }
      return true;
    }
    out.unknown_marker_immediate = imm != 0;
    return false;
  }
  if ((raw & 0xfff) == 0x037) {  // lui x0, imm
    out.type = InstrType::Marker;
    out.mnemonic = "lui";
    out.asm_string = "lui x0, " + std::to_string(raw >> 12);
    out.marker = marker::LuiPayload{raw >> 12};
    return true;
  }
  if ((raw & 0xfe007fff) == 0x00006033) {  // or x0, rs1, rs2
    const std::uint32_t rs1 = bits(raw, 19, 15), rs2 = bits(raw, 24, 20);
    out.type = InstrType::Marker;
    out.mnemonic = "or";
    out.asm_string = "or x0, ";
    out.asm_string += kXAbi[rs1];
    out.asm_string += ", ";
    out.asm_string += kXAbi[rs2];
    out.src1 = RegRef::x(rs1);
    out.src2 = RegRef::x(rs2);
    out.marker = marker::EventAndValue{static_cast<std::uint8_t>(rs1),
                                       static_cast<std::uint8_t>(rs2)};
    return true;
  }
  return false;
}

// Decodes without assigning a Paraver code. Returns false if undecodable.
inline bool decode_raw(std::uint32_t raw, SpecVersion spec, bool record_scalar,
                       DecodedInstr& out) {
  if ((raw & 3) != 3) {
    if (raw > 0xffff) return false;
    out.length = 2;
    out.type = InstrType::Scalar;
    return decode_compressed(raw, record_scalar, out);
  }
  out.length = 4;
  const std::uint32_t opcode = raw & 0x7f;
  if (opcode == kOpV) return decode_opv(raw, spec, out);
  if ((opcode == kOpLoadFp || opcode == kOpStoreFp) && is_vector_width(bits(raw, 14, 12))) {
    return decode_vmem(raw, spec, out);
  }
  if (decode_marker(raw, out)) return true;
  out.type = InstrType::Scalar;
  return decode_scalar32(raw, record_scalar, out);
}

}  // namespace detail

// Decodes one instruction. Throws Error(UndecodableEncoding) when `raw`
// matches no known pattern for `spec`.
inline DecodedInstr decode(std::uint32_t raw, std::uint64_t pc, SpecVersion spec,
                           DecodeOptions options = {}) {
  DecodedInstr d;
  d.pc = pc;
  d.raw = raw;
  if (!detail::decode_raw(raw, spec, options.record_scalar, d)) {
    throw Error(ErrorKind::UndecodableEncoding,
                "no " + std::string(to_string(spec)) + " pattern matches " + detail::hex32(raw));
  }
  switch (d.type) {
    case InstrType::Marker:
      d.paraver_code = 0;
      break;
    case InstrType::Scalar:
      d.paraver_code = options.record_scalar ? paraver_code(d.mnemonic, spec) : kScalarParaverCode;
      break;
    default:
      d.paraver_code = paraver_code(d.mnemonic, spec);
      break;
  }
  return d;
}

inline const std::string& disassemble(const DecodedInstr& instr) { return instr.asm_string; }

inline std::optional<MarkerKind> classify_marker(const DecodedInstr& instr) {
  if (instr.type != InstrType::Marker) return std::nullopt;
  return instr.marker;
}

// Every mnemonic the decoder can produce for `spec`, sorted. This is the
// domain of the Paraver instruction-class codes.
inline std::vector<std::string> known_mnemonics(SpecVersion spec) {
  std::set<std::string> names;
  const auto add = [&](std::uint32_t raw) {
    DecodedInstr d;
    if (detail::decode_raw(raw, spec, true, d) && d.type != InstrType::Marker) {
      names.insert(d.mnemonic);
    }
  };
  // OP-V: funct6 x funct3 x vm x vs1, with vs2 in {0, 1} (vs2 only selects
  // in unary groups and merge forms).
  for (std::uint32_t f6 = 0; f6 < 64; ++f6)
    for (std::uint32_t f3 = 0; f3 < 8; ++f3)
      for (std::uint32_t vm = 0; vm < 2; ++vm)
        for (std::uint32_t vs1 = 0; vs1 < 32; ++vs1)
          for (std::uint32_t vs2 = 0; vs2 < 2; ++vs2)
            add((f6 << 26) | (vm << 25) | (vs2 << 20) | (vs1 << 15) | (f3 << 12) | detail::kOpV);
  // Vector memory: nf x mew/mop x vm x lumop x width, loads and stores.
  for (std::uint32_t op : {detail::kOpLoadFp, detail::kOpStoreFp})
    for (std::uint32_t hi = 0; hi < 128; ++hi)
      for (std::uint32_t lumop = 0; lumop < 32; ++lumop)
        for (std::uint32_t width : {0u, 5u, 6u, 7u})
          add((hi << 25) | (lumop << 20) | (width << 12) | op);
  // Scalar: table rows plus ordering suffixes, fence.tso, all 16-bit forms.
  for (const auto& p : detail::kScalarPatterns) {
    names.insert(std::string(p.name));
    if (p.fmt == detail::SFmt::Amo || p.fmt == detail::SFmt::Lr || p.fmt == detail::SFmt::Sc) {
      for (const char* s : {".aq", ".rl", ".aqrl"}) names.insert(std::string(p.name) + s);
    }
  }
  names.insert("fence.tso");
  for (std::uint32_t c = 0; c < 0x10000; ++c) {
    if ((c & 3) != 3) add(c);
  }
  return {names.begin(), names.end()};
}

}  // namespace rave
