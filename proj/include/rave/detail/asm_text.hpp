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

// Register names and the small text builder shared by the decoders.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "rave/isa.hpp"

namespace rave::detail {

inline constexpr std::array<std::string_view, 32> kXAbi = {
    "zero", "ra", "sp", "gp", "tp",  "t0",  "t1", "t2", "s0", "s1", "a0",
    "a1",   "a2", "a3", "a4", "a5",  "a6",  "a7", "s2", "s3", "s4", "s5",
    "s6",   "s7", "s8", "s9", "s10", "s11", "t3", "t4", "t5", "t6"};

inline constexpr std::array<std::string_view, 32> kFAbi = {
    "ft0", "ft1", "ft2",  "ft3",  "ft4", "ft5", "ft6",  "ft7",
    "fs0", "fs1", "fa0",  "fa1",  "fa2", "fa3", "fa4",  "fa5",
    "fa6", "fa7", "fs2",  "fs3",  "fs4", "fs5", "fs6",  "fs7",
    "fs8", "fs9", "fs10", "fs11", "ft8", "ft9", "ft10", "ft11"};

inline constexpr std::array<std::string_view, 32> kVNames = {
    "v0",  "v1",  "v2",  "v3",  "v4",  "v5",  "v6",  "v7",  "v8",  "v9",  "v10",
    "v11", "v12", "v13", "v14", "v15", "v16", "v17", "v18", "v19", "v20", "v21",
    "v22", "v23", "v24", "v25", "v26", "v27", "v28", "v29", "v30", "v31"};

inline std::string_view reg_name(RegRef r) {
  switch (r.file) {
    case RegFile::X: return kXAbi[r.index & 31];
    case RegFile::F: return kFAbi[r.index & 31];
    case RegFile::V: return kVNames[r.index & 31];
    case RegFile::None: break;
  }
  return "?";
}

// Accumulates "mnemonic op, op, ..." and the dst/src register slots.
// When `text` is false only the register slots are filled.
class AsmBuilder {
 public:
  AsmBuilder(DecodedInstr& out, bool text) : out_(out), text_(text) {}

  void mnemonic(std::string_view m) {
    out_.mnemonic.assign(m);
    if (text_) out_.asm_string.assign(m);
  }
  void mnemonic_suffix(std::string_view s) {
    out_.mnemonic += s;
    if (text_) out_.asm_string += s;
  }

  void dst(RegRef r) {
    out_.dst = r;
    raw(reg_name(r));
  }
  void src(RegRef r) {
    push_src(r);
    raw(reg_name(r));
  }
  // Source register printed as "(name)" or "imm(name)".
  void mem_src(RegRef base, std::int64_t offset, bool print_offset) {
    push_src(base);
    if (!text_) return;
    sep();
    if (print_offset) out_.asm_string += std::to_string(offset);
    out_.asm_string += '(';
    out_.asm_string += reg_name(base);
    out_.asm_string += ')';
  }
  void imm(std::int64_t v) {
    if (text_) raw(std::to_string(v));
  }
  void raw(std::string_view s) {
    if (!text_) return;
    sep();
    out_.asm_string += s;
  }
  // Register slot that is not printed (implicit operand).
  void implicit_dst(RegRef r) { out_.dst = r; }
  void implicit_src(RegRef r) { push_src(r); }

  bool text() const { return text_; }

 private:
  void sep() {
    out_.asm_string += first_ ? " " : ", ";
    first_ = false;
  }
  void push_src(RegRef r) {
    if (!out_.src1.present()) out_.src1 = r;
    else if (!out_.src2.present()) out_.src2 = r;
    else if (!out_.src3.present()) out_.src3 = r;
  }

  DecodedInstr& out_;
  bool text_;
  bool first_ = true;
};

inline constexpr std::uint32_t bits(std::uint32_t v, unsigned hi, unsigned lo) {
  return (v >> lo) & ((1u << (hi - lo + 1)) - 1u);
}

inline constexpr std::int64_t sext(std::uint64_t v, unsigned width) {
  const std::uint64_t m = 1ull << (width - 1);
  v &= (width == 64) ? ~0ull : ((1ull << width) - 1);
  return static_cast<std::int64_t>((v ^ m) - m);
}

}  // namespace rave::detail
