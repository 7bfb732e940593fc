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

// Architectural vector configuration driven by vsetvl-family instructions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "rave/detail/vtype.hpp"
#include "rave/error.hpp"
#include "rave/isa.hpp"

namespace rave {

inline constexpr std::uint64_t kDefaultVlen = 16384;
inline constexpr unsigned kSewBuckets = 4;

inline constexpr bool valid_vlen(std::uint64_t vlen) {
  return vlen >= 128 && (vlen & (vlen - 1)) == 0;
}

// 8 -> 0, 16 -> 1, 32 -> 2, 64 -> 3.
inline unsigned sew_bucket(unsigned sew_bits) {
  switch (sew_bits) {
    case 8: return 0;
    case 16: return 1;
    case 32: return 2;
    case 64: return 3;
    default:
      throw Error(ErrorKind::UnsupportedSew, "SEW " + std::to_string(sew_bits) + " has no counter bucket");
  }
}

struct VectorState {
  std::uint64_t vlen_bits = kDefaultVlen;
  VType vtype;             // vill until the first valid vsetvl
  std::uint64_t vl = 0;
  unsigned last_sew = 8;   // SEW of the last valid configuration

  bool vill() const { return vtype.vill; }
  unsigned sew_bits() const { return vtype.vill ? last_sew : vtype.sew; }
  std::uint64_t lmul_num() const { return vtype.lmul_log2 > 0 ? 1ull << vtype.lmul_log2 : 1; }
  std::uint64_t lmul_den() const { return vtype.lmul_log2 < 0 ? 1ull << -vtype.lmul_log2 : 1; }
  std::uint64_t vlmax() const { return rave::vlmax(vtype, vlen_bits); }

  // "m1", "mf2", or "-" when vill.
  std::string lmul_text() const {
    if (vtype.vill) return "-";
    return vtype.lmul_log2 >= 0 ? "m" + std::to_string(lmul_num()) : "mf" + std::to_string(lmul_den());
  }

  friend bool operator==(const VectorState&, const VectorState&) = default;
};

// Register values read by a vsetvl-family instruction.
struct VsetvlInputs {
  std::optional<std::uint64_t> rs1_value;  // AVL
  std::optional<std::uint64_t> rs2_value;  // vtype (vsetvl only)
};

// Applies a vsetvl/vsetvli/vsetivli. In strict mode a missing AVL or vtype
// value throws MissingAvl; otherwise a warning is recorded and vl is carried
// over, clamped to the new VLMAX.
inline VectorState apply_vsetvl(const VectorState& state, const DecodedInstr& instr,
                                const VsetvlInputs& in, SpecVersion spec, bool strict = true,
                                Diagnostics* diag = nullptr) {
  const VsetvlFields& f = *instr.vsetvl;
  VectorState next = state;

  const auto missing = [&](const char* what) {
    const std::string msg = std::string(what) + " value missing for " + instr.asm_string;
    if (strict) throw Error(ErrorKind::MissingAvl, msg);
    if (diag) diag->warn(ErrorKind::MissingAvl, msg);
  };

  std::optional<std::uint64_t> vtype_value;
  if (f.form == VsetvlForm::Vsetvl) {
    vtype_value = in.rs2_value;
    if (!vtype_value) {
      missing("vtype");
      next.vtype = VType{};
      next.vl = 0;
      return next;
    }
  } else {
    vtype_value = f.vtypei;
  }

  next.vtype = parse_vtype(*vtype_value, spec);
  if (next.vtype.vill) {
    next.vl = 0;
    return next;
  }
  next.last_sew = next.vtype.sew;
  const std::uint64_t vlmax = next.vlmax();

  if (f.form == VsetvlForm::Vsetivli) {
    next.vl = std::min<std::uint64_t>(f.uimm, vlmax);
  } else if (f.rs1 == 0) {
    if (spec == SpecVersion::V1_0 && f.rd == 0) {
      next.vl = std::min(state.vl, vlmax);
    } else {
      next.vl = vlmax;
    }
  } else if (in.rs1_value) {
    next.vl = std::min(*in.rs1_value, vlmax);
  } else {
    missing("AVL");
    next.vl = std::min(state.vl, vlmax);
  }
  return next;
}

}  // namespace rave
