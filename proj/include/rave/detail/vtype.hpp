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

#pragma once

#include <cstdint>
#include <string>

#include "rave/isa.hpp"

namespace rave {

inline constexpr unsigned kElen = 64;

// Decoded vtype CSR value.
struct VType {
  bool vill = true;
  unsigned sew = 8;
  int lmul_log2 = 0;  // -3..3
  bool ta = false;
  bool ma = false;
  unsigned ediv = 0;  // 0.7.1 only

  friend bool operator==(const VType&, const VType&) = default;
};

namespace detail {

struct VTypeFields {
  bool encodable = false;  // false: reserved field values, print as number
  unsigned sew = 8;
  int lmul_log2 = 0;
  bool ta = false, ma = false;
  unsigned ediv = 0;
};

inline VTypeFields vtype_fields(std::uint64_t v, SpecVersion spec, unsigned width) {
  VTypeFields f;
  const std::uint64_t mask = width >= 64 ? ~0ull : ((1ull << width) - 1);
  v &= mask;
  if (spec == SpecVersion::V1_0) {
    const unsigned vlmul = v & 7;
    const unsigned vsew = (v >> 3) & 7;
    f.ta = (v >> 6) & 1;
    f.ma = (v >> 7) & 1;
    f.sew = 8u << vsew;
    f.lmul_log2 = vlmul < 4 ? static_cast<int>(vlmul) : static_cast<int>(vlmul) - 8;
    f.encodable = vlmul != 4 && vsew <= 3 && (v >> 8) == 0;
  } else {
    const unsigned vlmul = v & 3;
    const unsigned vsew = (v >> 2) & 7;
    f.ediv = (v >> 5) & 3;
    f.sew = 8u << vsew;
    f.lmul_log2 = static_cast<int>(vlmul);
    f.encodable = vsew <= 3 && (v >> 7) == 0;
  }
  return f;
}

}  // namespace detail

// Interprets a vtype value as written by vsetvl{i}. vill is set for reserved
// encodings, SEW above ELEN, or a fractional LMUL too small for SEW.
inline VType parse_vtype(std::uint64_t value, SpecVersion spec) {
  if (value >> 63) return VType{};
  const auto f = detail::vtype_fields(value, spec, 64);
  VType t;
  if (!f.encodable || f.ediv != 0) return t;
  if (f.lmul_log2 < 0 && f.sew > (kElen >> -f.lmul_log2)) return t;
  t.vill = false;
  t.sew = f.sew;
  t.lmul_log2 = f.lmul_log2;
  t.ta = f.ta;
  t.ma = f.ma;
  return t;
}

// VLMAX = LMUL * VLEN / SEW.
inline std::uint64_t vlmax(const VType& t, std::uint64_t vlen) {
  if (t.vill) return 0;
  const std::uint64_t base = vlen / t.sew;
  return t.lmul_log2 >= 0 ? base << t.lmul_log2 : base >> -t.lmul_log2;
}

// Text of a vtype immediate: "e64, m1, ta, ma" (1.0), "e64, m1" (0.7.1),
// or the decimal immediate when the fields are reserved.
inline std::string vtype_text(std::uint32_t imm, SpecVersion spec, unsigned width) {
  const auto f = detail::vtype_fields(imm, spec, width);
  if (!f.encodable) return std::to_string(imm);
  std::string s = "e" + std::to_string(f.sew) + ", ";
  s += f.lmul_log2 >= 0 ? "m" + std::to_string(1 << f.lmul_log2)
                        : "mf" + std::to_string(1 << -f.lmul_log2);
  if (spec == SpecVersion::V1_0) {
    s += f.ta ? ", ta" : ", tu";
    s += f.ma ? ", ma" : ", mu";
  } else if (f.ediv != 0) {
    s += ", d" + std::to_string(1 << f.ediv);
  }
  return s;
}

}  // namespace rave
