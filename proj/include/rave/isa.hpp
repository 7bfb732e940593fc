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

// Value types shared by the decoder and everything downstream of it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace rave {

enum class SpecVersion : std::uint8_t { V0_7_1, V1_0 };

inline std::string_view to_string(SpecVersion spec) {
  return spec == SpecVersion::V0_7_1 ? "v0.7.1" : "v1.0";
}

inline std::optional<SpecVersion> parse_spec_version(std::string_view text) {
  if (text == "v0.7.1" || text == "0.7.1") return SpecVersion::V0_7_1;
  if (text == "v1.0" || text == "1.0") return SpecVersion::V1_0;
  return std::nullopt;
}

enum class InstrType : std::uint8_t { Scalar, Vector, Vsetvl, Marker };
enum class VMajor : std::uint8_t { Other, Arith, Memory, Mask };
enum class VMinor : std::uint8_t { NoType, Fp, Int, Unit, Stride, Index };

inline std::string_view to_string(InstrType t) {
  switch (t) {
    case InstrType::Scalar: return "SCALAR";
    case InstrType::Vector: return "VECTOR";
    case InstrType::Vsetvl: return "VSETVL";
    case InstrType::Marker: return "MARKER";
  }
  return "?";
}

inline std::string_view to_string(VMajor m) {
  switch (m) {
    case VMajor::Other: return "OTHER";
    case VMajor::Arith: return "ARITH";
    case VMajor::Memory: return "MEMORY";
    case VMajor::Mask: return "MASK";
  }
  return "?";
}

inline std::string_view to_string(VMinor m) {
  switch (m) {
    case VMinor::NoType: return "NOTYPE";
    case VMinor::Fp: return "FP";
    case VMinor::Int: return "INT";
    case VMinor::Unit: return "UNIT";
    case VMinor::Stride: return "STRIDE";
    case VMinor::Index: return "INDEX";
  }
  return "?";
}

enum class RegFile : std::uint8_t { None, X, F, V };

// One register operand. index is -1 when the operand is absent.
struct RegRef {
  RegFile file = RegFile::None;
  std::int16_t index = -1;

  static constexpr RegRef x(unsigned n) { return {RegFile::X, static_cast<std::int16_t>(n)}; }
  static constexpr RegRef f(unsigned n) { return {RegFile::F, static_cast<std::int16_t>(n)}; }
  static constexpr RegRef v(unsigned n) { return {RegFile::V, static_cast<std::int16_t>(n)}; }

  constexpr bool present() const { return index >= 0; }
  friend constexpr bool operator==(const RegRef&, const RegRef&) = default;
};

// "x5", "f10", "v3" or "-".
inline std::string to_string(const RegRef& r) {
  if (!r.present()) return "-";
  char prefix = r.file == RegFile::X ? 'x' : r.file == RegFile::F ? 'f' : 'v';
  return prefix + std::to_string(r.index);
}

namespace marker {
struct StartTrace { friend bool operator==(StartTrace, StartTrace) = default; };
struct StopTrace { friend bool operator==(StopTrace, StopTrace) = default; };
struct RestartTrace { friend bool operator==(RestartTrace, RestartTrace) = default; };
struct NameDelimiter { friend bool operator==(NameDelimiter, NameDelimiter) = default; };
// Raw 20-bit immediate field of `lui x0, imm`.
struct LuiPayload {
  std::uint32_t imm = 0;
  friend bool operator==(LuiPayload, LuiPayload) = default;
};
// `or x0, src1, src2`: the event id lives in src1, the value in src2.
struct EventAndValue {
  std::uint8_t src1 = 0;
  std::uint8_t src2 = 0;
  friend bool operator==(EventAndValue, EventAndValue) = default;
};
}  // namespace marker

using MarkerKind = std::variant<marker::StartTrace, marker::StopTrace, marker::RestartTrace,
                                marker::NameDelimiter, marker::LuiPayload,
                                marker::EventAndValue>;

enum class VsetvlForm : std::uint8_t { Vsetvli, Vsetivli, Vsetvl };

// Operand fields of a vsetvl-family instruction.
struct VsetvlFields {
  VsetvlForm form = VsetvlForm::Vsetvli;
  std::uint8_t rd = 0;
  std::uint8_t rs1 = 0;       // AVL register (vsetvli, vsetvl)
  std::uint8_t rs2 = 0;       // vtype register (vsetvl)
  std::uint32_t uimm = 0;     // AVL immediate (vsetivli)
  std::uint32_t vtypei = 0;   // vtype immediate (vsetvli, vsetivli)
};

struct DecodedInstr {
  std::uint64_t pc = 0;
  std::uint32_t raw = 0;
  std::uint8_t length = 4;        // bytes: 2 for compressed encodings
  std::string mnemonic;           // empty for undetailed scalar instructions
  std::string asm_string;         // empty for undetailed scalar instructions
  RegRef dst, src1, src2, src3;
  InstrType type = InstrType::Scalar;
  VMajor v_major = VMajor::Other;
  VMinor v_minor = VMinor::NoType;
  bool masked = false;            // vector op executes under v0.t
  std::uint32_t paraver_code = 0;
  std::optional<VsetvlFields> vsetvl;
  std::optional<MarkerKind> marker;
  // Set for `addi x0, x0, imm` with an immediate outside the marker codes.
  bool unknown_marker_immediate = false;
};

}  // namespace rave
