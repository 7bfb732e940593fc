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

// RV64IMAFDC + Zicsr + Zifencei decoder. Used to validate every scalar
// encoding and, when detail is requested, to render it.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rave/detail/asm_text.hpp"
#include "rave/isa.hpp"

namespace rave::detail {

enum class SFmt : std::uint8_t {
  R, I, Shift, U, J, Jalr, Load, Store, Branch, None, Fence, Csr, CsrI,
  Amo, Lr, Sc, FLoad, FStore, FR, FRrm, FR4rm, FUnaryRm, FtoXrm, FtoX,
  XtoFrm, XtoF, FCmp, SfenceVma,
};

struct ScalarPattern {
  std::uint32_t mask;
  std::uint32_t match;
  std::string_view name;
  SFmt fmt;
};

namespace enc {
inline constexpr std::uint32_t kOp = 0x7f;
inline constexpr std::uint32_t kOpF3 = 0x707f;
inline constexpr std::uint32_t kOpF3F7 = 0xfe00707f;
inline constexpr std::uint32_t kOpF7 = 0xfe00007f;
inline constexpr std::uint32_t kOpF7Rs2 = 0xfff0007f;
inline constexpr std::uint32_t kOpF3F7Rs2 = 0xfff0707f;
inline constexpr std::uint32_t kOpF3F6 = 0xfc00707f;
inline constexpr std::uint32_t kAmo = 0xf800707f;
inline constexpr std::uint32_t kLr = 0xf9f0707f;
inline constexpr std::uint32_t kR4 = 0x0600007f;

constexpr std::uint32_t m(std::uint32_t op, std::uint32_t f3 = 0, std::uint32_t f7 = 0,
                          std::uint32_t rs2 = 0) {
  return op | (f3 << 12) | (rs2 << 20) | (f7 << 25);
}
}  // namespace enc

// clang-format off
inline constexpr ScalarPattern kScalarPatterns[] = {
    {enc::kOp, 0x37, "lui", SFmt::U},
    {enc::kOp, 0x17, "auipc", SFmt::U},
    {enc::kOp, 0x6f, "jal", SFmt::J},
    {enc::kOpF3, enc::m(0x67, 0), "jalr", SFmt::Jalr},
    {enc::kOpF3, enc::m(0x63, 0), "beq", SFmt::Branch},
    {enc::kOpF3, enc::m(0x63, 1), "bne", SFmt::Branch},
    {enc::kOpF3, enc::m(0x63, 4), "blt", SFmt::Branch},
    {enc::kOpF3, enc::m(0x63, 5), "bge", SFmt::Branch},
    {enc::kOpF3, enc::m(0x63, 6), "bltu", SFmt::Branch},
    {enc::kOpF3, enc::m(0x63, 7), "bgeu", SFmt::Branch},
    {enc::kOpF3, enc::m(0x03, 0), "lb", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 1), "lh", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 2), "lw", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 3), "ld", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 4), "lbu", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 5), "lhu", SFmt::Load},
    {enc::kOpF3, enc::m(0x03, 6), "lwu", SFmt::Load},
    {enc::kOpF3, enc::m(0x23, 0), "sb", SFmt::Store},
    {enc::kOpF3, enc::m(0x23, 1), "sh", SFmt::Store},
    {enc::kOpF3, enc::m(0x23, 2), "sw", SFmt::Store},
    {enc::kOpF3, enc::m(0x23, 3), "sd", SFmt::Store},
    {enc::kOpF3, enc::m(0x13, 0), "addi", SFmt::I},
    {enc::kOpF3, enc::m(0x13, 2), "slti", SFmt::I},
    {enc::kOpF3, enc::m(0x13, 3), "sltiu", SFmt::I},
    {enc::kOpF3, enc::m(0x13, 4), "xori", SFmt::I},
    {enc::kOpF3, enc::m(0x13, 6), "ori", SFmt::I},
    {enc::kOpF3, enc::m(0x13, 7), "andi", SFmt::I},
    {enc::kOpF3F6, enc::m(0x13, 1), "slli", SFmt::Shift},
    {enc::kOpF3F6, enc::m(0x13, 5), "srli", SFmt::Shift},
    {enc::kOpF3F6, enc::m(0x13, 5, 0x20), "srai", SFmt::Shift},
    {enc::kOpF3F7, enc::m(0x33, 0, 0x00), "add", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 0, 0x20), "sub", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 1, 0x00), "sll", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 2, 0x00), "slt", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 3, 0x00), "sltu", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 4, 0x00), "xor", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 5, 0x00), "srl", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 5, 0x20), "sra", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 6, 0x00), "or", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 7, 0x00), "and", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 0, 0x01), "mul", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 1, 0x01), "mulh", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 2, 0x01), "mulhsu", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 3, 0x01), "mulhu", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 4, 0x01), "div", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 5, 0x01), "divu", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 6, 0x01), "rem", SFmt::R},
    {enc::kOpF3F7, enc::m(0x33, 7, 0x01), "remu", SFmt::R},
    {enc::kOpF3, enc::m(0x1b, 0), "addiw", SFmt::I},
    {enc::kOpF3F7, enc::m(0x1b, 1, 0x00), "slliw", SFmt::Shift},
    {enc::kOpF3F7, enc::m(0x1b, 5, 0x00), "srliw", SFmt::Shift},
    {enc::kOpF3F7, enc::m(0x1b, 5, 0x20), "sraiw", SFmt::Shift},
    {enc::kOpF3F7, enc::m(0x3b, 0, 0x00), "addw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 0, 0x20), "subw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 1, 0x00), "sllw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 5, 0x00), "srlw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 5, 0x20), "sraw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 0, 0x01), "mulw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 4, 0x01), "divw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 5, 0x01), "divuw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 6, 0x01), "remw", SFmt::R},
    {enc::kOpF3F7, enc::m(0x3b, 7, 0x01), "remuw", SFmt::R},
    {enc::kOpF3, enc::m(0x0f, 0), "fence", SFmt::Fence},
    {enc::kOpF3, enc::m(0x0f, 1), "fence.i", SFmt::None},
    {0xffffffff, 0x00000073, "ecall", SFmt::None},
    {0xffffffff, 0x00100073, "ebreak", SFmt::None},
    {0xffffffff, 0x10200073, "sret", SFmt::None},
    {0xffffffff, 0x30200073, "mret", SFmt::None},
    {0xffffffff, 0x10500073, "wfi", SFmt::None},
    {0xfe007fff, 0x12000073, "sfence.vma", SFmt::SfenceVma},
    {enc::kOpF3, enc::m(0x73, 1), "csrrw", SFmt::Csr},
    {enc::kOpF3, enc::m(0x73, 2), "csrrs", SFmt::Csr},
    {enc::kOpF3, enc::m(0x73, 3), "csrrc", SFmt::Csr},
    {enc::kOpF3, enc::m(0x73, 5), "csrrwi", SFmt::CsrI},
    {enc::kOpF3, enc::m(0x73, 6), "csrrsi", SFmt::CsrI},
    {enc::kOpF3, enc::m(0x73, 7), "csrrci", SFmt::CsrI},
    // A: funct5 in bits 31:27, aq/rl in 26:25.
    {enc::kLr, enc::m(0x2f, 2, 0x02 << 2), "lr.w", SFmt::Lr},
    {enc::kAmo, enc::m(0x2f, 2, 0x03 << 2), "sc.w", SFmt::Sc},
    {enc::kAmo, enc::m(0x2f, 2, 0x01 << 2), "amoswap.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x00 << 2), "amoadd.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x04 << 2), "amoxor.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x0c << 2), "amoand.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x08 << 2), "amoor.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x10 << 2), "amomin.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x14 << 2), "amomax.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x18 << 2), "amominu.w", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 2, 0x1c << 2), "amomaxu.w", SFmt::Amo},
    {enc::kLr, enc::m(0x2f, 3, 0x02 << 2), "lr.d", SFmt::Lr},
    {enc::kAmo, enc::m(0x2f, 3, 0x03 << 2), "sc.d", SFmt::Sc},
    {enc::kAmo, enc::m(0x2f, 3, 0x01 << 2), "amoswap.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x00 << 2), "amoadd.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x04 << 2), "amoxor.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x0c << 2), "amoand.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x08 << 2), "amoor.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x10 << 2), "amomin.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x14 << 2), "amomax.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x18 << 2), "amominu.d", SFmt::Amo},
    {enc::kAmo, enc::m(0x2f, 3, 0x1c << 2), "amomaxu.d", SFmt::Amo},
    // F and D
    {enc::kOpF3, enc::m(0x07, 2), "flw", SFmt::FLoad},
    {enc::kOpF3, enc::m(0x07, 3), "fld", SFmt::FLoad},
    {enc::kOpF3, enc::m(0x27, 2), "fsw", SFmt::FStore},
    {enc::kOpF3, enc::m(0x27, 3), "fsd", SFmt::FStore},
    {enc::kR4, 0x43, "fmadd.s", SFmt::FR4rm},
    {enc::kR4, 0x47, "fmsub.s", SFmt::FR4rm},
    {enc::kR4, 0x4b, "fnmsub.s", SFmt::FR4rm},
    {enc::kR4, 0x4f, "fnmadd.s", SFmt::FR4rm},
    {enc::kR4, 0x43 | (1u << 25), "fmadd.d", SFmt::FR4rm},
    {enc::kR4, 0x47 | (1u << 25), "fmsub.d", SFmt::FR4rm},
    {enc::kR4, 0x4b | (1u << 25), "fnmsub.d", SFmt::FR4rm},
    {enc::kR4, 0x4f | (1u << 25), "fnmadd.d", SFmt::FR4rm},
    {enc::kOpF7, enc::m(0x53, 0, 0x00), "fadd.s", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x04), "fsub.s", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x08), "fmul.s", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x0c), "fdiv.s", SFmt::FRrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x2c), "fsqrt.s", SFmt::FUnaryRm},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x10), "fsgnj.s", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x10), "fsgnjn.s", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 2, 0x10), "fsgnjx.s", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x14), "fmin.s", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x14), "fmax.s", SFmt::FR},
    {enc::kOpF7, enc::m(0x53, 0, 0x01), "fadd.d", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x05), "fsub.d", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x09), "fmul.d", SFmt::FRrm},
    {enc::kOpF7, enc::m(0x53, 0, 0x0d), "fdiv.d", SFmt::FRrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x2d), "fsqrt.d", SFmt::FUnaryRm},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x11), "fsgnj.d", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x11), "fsgnjn.d", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 2, 0x11), "fsgnjx.d", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x15), "fmin.d", SFmt::FR},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x15), "fmax.d", SFmt::FR},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x20, 1), "fcvt.s.d", SFmt::FUnaryRm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x21, 0), "fcvt.d.s", SFmt::FUnaryRm},
    {enc::kOpF3F7, enc::m(0x53, 2, 0x50), "feq.s", SFmt::FCmp},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x50), "flt.s", SFmt::FCmp},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x50), "fle.s", SFmt::FCmp},
    {enc::kOpF3F7, enc::m(0x53, 2, 0x51), "feq.d", SFmt::FCmp},
    {enc::kOpF3F7, enc::m(0x53, 1, 0x51), "flt.d", SFmt::FCmp},
    {enc::kOpF3F7, enc::m(0x53, 0, 0x51), "fle.d", SFmt::FCmp},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x60, 0), "fcvt.w.s", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x60, 1), "fcvt.wu.s", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x60, 2), "fcvt.l.s", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x60, 3), "fcvt.lu.s", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x61, 0), "fcvt.w.d", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x61, 1), "fcvt.wu.d", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x61, 2), "fcvt.l.d", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x61, 3), "fcvt.lu.d", SFmt::FtoXrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x68, 0), "fcvt.s.w", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x68, 1), "fcvt.s.wu", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x68, 2), "fcvt.s.l", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x68, 3), "fcvt.s.lu", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x69, 0), "fcvt.d.w", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x69, 1), "fcvt.d.wu", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x69, 2), "fcvt.d.l", SFmt::XtoFrm},
    {enc::kOpF7Rs2, enc::m(0x53, 0, 0x69, 3), "fcvt.d.lu", SFmt::XtoFrm},
    {enc::kOpF3F7Rs2, enc::m(0x53, 0, 0x70), "fmv.x.w", SFmt::FtoX},
    {enc::kOpF3F7Rs2, enc::m(0x53, 1, 0x70), "fclass.s", SFmt::FtoX},
    {enc::kOpF3F7Rs2, enc::m(0x53, 0, 0x71), "fmv.x.d", SFmt::FtoX},
    {enc::kOpF3F7Rs2, enc::m(0x53, 1, 0x71), "fclass.d", SFmt::FtoX},
    {enc::kOpF3F7Rs2, enc::m(0x53, 0, 0x78), "fmv.w.x", SFmt::XtoF},
    {enc::kOpF3F7Rs2, enc::m(0x53, 0, 0x79), "fmv.d.x", SFmt::XtoF},
};
// clang-format on

inline std::string_view csr_name(std::uint32_t csr) {
  switch (csr) {
    case 0x001: return "fflags";
    case 0x002: return "frm";
    case 0x003: return "fcsr";
    case 0x008: return "vstart";
    case 0x009: return "vxsat";
    case 0x00a: return "vxrm";
    case 0x00f: return "vcsr";
    case 0xc00: return "cycle";
    case 0xc01: return "time";
    case 0xc02: return "instret";
    case 0xc20: return "vl";
    case 0xc21: return "vtype";
    case 0xc22: return "vlenb";
    default: return {};
  }
}

// Empty for dyn; nullopt-like "!" for reserved encodings.
inline std::string_view rounding_mode(std::uint32_t rm) {
  switch (rm) {
    case 0: return "rne";
    case 1: return "rtz";
    case 2: return "rdn";
    case 3: return "rup";
    case 4: return "rmm";
    case 7: return "";
    default: return "!";
  }
}

inline std::string fence_set(std::uint32_t v) {
  std::string s;
  if (v & 8) s += 'i';
  if (v & 4) s += 'o';
  if (v & 2) s += 'r';
  if (v & 1) s += 'w';
  return s.empty() ? "0" : s;
}

inline const ScalarPattern* find_scalar_pattern(std::uint32_t raw) {
  for (const auto& p : kScalarPatterns) {
    if ((raw & p.mask) == p.match) return &p;
  }
  return nullptr;
}

// Decodes a 32-bit scalar encoding. Returns false when it is not a valid
// RV64GC instruction. Mnemonic, text and registers are written only when
// `detail` is set.
inline bool decode_scalar32(std::uint32_t raw, bool detail, DecodedInstr& out) {
  const ScalarPattern* p = find_scalar_pattern(raw);
  if (p == nullptr) return false;

  const std::uint32_t rd = bits(raw, 11, 7);
  const std::uint32_t rs1 = bits(raw, 19, 15);
  const std::uint32_t rs2 = bits(raw, 24, 20);
  const std::uint32_t rs3 = bits(raw, 31, 27);
  const std::uint32_t rm = bits(raw, 14, 12);

  const bool uses_rm = p->fmt == SFmt::FRrm || p->fmt == SFmt::FR4rm ||
                       p->fmt == SFmt::FUnaryRm || p->fmt == SFmt::FtoXrm ||
                       p->fmt == SFmt::XtoFrm;
  if (uses_rm && rounding_mode(rm) == "!") return false;
  if (p->fmt == SFmt::Shift && bits(raw, 6, 0) == 0x1b && bits(raw, 25, 25) != 0) return false;
  if (!detail) return true;

  AsmBuilder b(out, true);
  const auto X = [](std::uint32_t n) { return RegRef::x(n); };
  const auto F = [](std::uint32_t n) { return RegRef::f(n); };
  const std::int64_t imm_i = sext(bits(raw, 31, 20), 12);
  const std::int64_t imm_s = sext((bits(raw, 31, 25) << 5) | rd, 12);
  const auto add_rm = [&] {
    if (auto s = rounding_mode(rm); !s.empty()) b.raw(s);
  };

  b.mnemonic(p->name);
  switch (p->fmt) {
    case SFmt::R:
      b.dst(X(rd)); b.src(X(rs1)); b.src(X(rs2));
      break;
    case SFmt::I:
      b.dst(X(rd)); b.src(X(rs1)); b.imm(imm_i);
      break;
    case SFmt::Shift:
      b.dst(X(rd)); b.src(X(rs1)); b.imm(bits(raw, 25, 20));
      break;
    case SFmt::U:
      b.dst(X(rd)); b.imm(bits(raw, 31, 12));
      break;
    case SFmt::J: {
      const std::uint32_t off = (bits(raw, 31, 31) << 20) | (bits(raw, 19, 12) << 12) |
                                (bits(raw, 20, 20) << 11) | (bits(raw, 30, 21) << 1);
      b.dst(X(rd)); b.imm(sext(off, 21));
      break;
    }
    case SFmt::Jalr:
      b.dst(X(rd)); b.mem_src(X(rs1), imm_i, true);
      break;
    case SFmt::Load:
      b.dst(X(rd)); b.mem_src(X(rs1), imm_i, true);
      break;
    case SFmt::Store:
      b.src(X(rs2)); b.mem_src(X(rs1), imm_s, true);
      break;
    case SFmt::Branch: {
      const std::uint32_t off = (bits(raw, 31, 31) << 12) | (bits(raw, 7, 7) << 11) |
                                (bits(raw, 30, 25) << 5) | (bits(raw, 11, 8) << 1);
      b.src(X(rs1)); b.src(X(rs2)); b.imm(sext(off, 13));
      break;
    }
    case SFmt::None:
      break;
    case SFmt::Fence: {
      const std::uint32_t pred = bits(raw, 27, 24), succ = bits(raw, 23, 20);
      if (bits(raw, 31, 28) == 0b1000 && pred == 0b0011 && succ == 0b0011) {
        b.mnemonic("fence.tso");
      } else {
        b.raw(fence_set(pred)); b.raw(fence_set(succ));
      }
      break;
    }
    case SFmt::Csr:
    case SFmt::CsrI: {
      const std::uint32_t csr = bits(raw, 31, 20);
      b.dst(X(rd));
      if (auto n = csr_name(csr); !n.empty()) b.raw(n);
      else b.imm(csr);
      if (p->fmt == SFmt::Csr) b.src(X(rs1));
      else b.imm(rs1);
      break;
    }
    case SFmt::Amo:
    case SFmt::Lr:
    case SFmt::Sc: {
      static constexpr std::string_view kOrd[] = {"", ".rl", ".aq", ".aqrl"};
      b.mnemonic_suffix(kOrd[bits(raw, 26, 25)]);
      b.dst(X(rd));
      if (p->fmt != SFmt::Lr) b.src(X(rs2));
      b.mem_src(X(rs1), 0, false);
      break;
    }
    case SFmt::FLoad:
      b.dst(F(rd)); b.mem_src(X(rs1), imm_i, true);
      break;
    case SFmt::FStore:
      b.src(F(rs2)); b.mem_src(X(rs1), imm_s, true);
      break;
    case SFmt::FR:
      b.dst(F(rd)); b.src(F(rs1)); b.src(F(rs2));
      break;
    case SFmt::FRrm:
      b.dst(F(rd)); b.src(F(rs1)); b.src(F(rs2)); add_rm();
      break;
    case SFmt::FR4rm:
      b.dst(F(rd)); b.src(F(rs1)); b.src(F(rs2)); b.src(F(rs3)); add_rm();
      break;
    case SFmt::FUnaryRm:
      b.dst(F(rd)); b.src(F(rs1)); add_rm();
      break;
    case SFmt::FtoXrm:
      b.dst(X(rd)); b.src(F(rs1)); add_rm();
      break;
    case SFmt::FtoX:
      b.dst(X(rd)); b.src(F(rs1));
      break;
    case SFmt::XtoFrm:
      b.dst(F(rd)); b.src(X(rs1)); add_rm();
      break;
    case SFmt::XtoF:
      b.dst(F(rd)); b.src(X(rs1));
      break;
    case SFmt::FCmp:
      b.dst(X(rd)); b.src(F(rs1)); b.src(F(rs2));
      break;
    case SFmt::SfenceVma:
      b.src(X(rs1)); b.src(X(rs2));
      break;
  }
  return true;
}

// Decodes a 16-bit compressed encoding (RV64C with D).
inline bool decode_compressed(std::uint32_t raw16, bool detail, DecodedInstr& out) {
  const std::uint32_t c = raw16 & 0xffff;
  const std::uint32_t op = c & 3;
  const std::uint32_t f3 = bits(c, 15, 13);
  const std::uint32_t rd = bits(c, 11, 7);      // full rd/rs1
  const std::uint32_t rs2 = bits(c, 6, 2);      // full rs2
  const std::uint32_t rdp = 8 + bits(c, 4, 2);  // rd'/rs2'
  const std::uint32_t rs1p = 8 + bits(c, 9, 7); // rs1'/rd'
  const auto X = [](std::uint32_t n) { return RegRef::x(n); };
  const auto F = [](std::uint32_t n) { return RegRef::f(n); };
  const std::int64_t ci_imm = sext((bits(c, 12, 12) << 5) | bits(c, 6, 2), 6);
  const std::uint32_t ci_uimm = (bits(c, 12, 12) << 5) | bits(c, 6, 2);
  const std::uint32_t cl_w = (bits(c, 12, 10) << 3) | (bits(c, 6, 6) << 2) | (bits(c, 5, 5) << 6);
  const std::uint32_t cl_d = (bits(c, 12, 10) << 3) | (bits(c, 6, 5) << 6);

  if (c == 0) return false;

  AsmBuilder b(out, detail);
  // Builder only writes when detail is set; the control flow below still
  // runs to validate reserved encodings.
  const auto name = [&](std::string_view n) { if (detail) b.mnemonic(n); };
  const auto dst = [&](RegRef r) { if (detail) b.dst(r); };
  const auto src = [&](RegRef r) { if (detail) b.src(r); };
  const auto isrc = [&](RegRef r) { if (detail) b.implicit_src(r); };
  const auto imm = [&](std::int64_t v) { if (detail) b.imm(v); };
  const auto mem = [&](RegRef base, std::int64_t off) { if (detail) b.mem_src(base, off, true); };

  switch (op) {
    case 0:
      switch (f3) {
        case 0: {
          const std::uint32_t nz = (bits(c, 12, 11) << 4) | (bits(c, 10, 7) << 6) |
                                   (bits(c, 6, 6) << 2) | (bits(c, 5, 5) << 3);
          if (nz == 0) return false;
          name("c.addi4spn"); dst(X(rdp)); src(X(2)); imm(nz);
          return true;
        }
        case 1: name("c.fld"); dst(F(rdp)); mem(X(rs1p), cl_d); return true;
        case 2: name("c.lw"); dst(X(rdp)); mem(X(rs1p), cl_w); return true;
        case 3: name("c.ld"); dst(X(rdp)); mem(X(rs1p), cl_d); return true;
        case 5: name("c.fsd"); src(F(rdp)); mem(X(rs1p), cl_d); return true;
        case 6: name("c.sw"); src(X(rdp)); mem(X(rs1p), cl_w); return true;
        case 7: name("c.sd"); src(X(rdp)); mem(X(rs1p), cl_d); return true;
        default: return false;
      }
    case 1:
      switch (f3) {
        case 0:
          if (rd == 0) {
            name("c.nop");
            return true;
          }
          name("c.addi"); dst(X(rd)); isrc(X(rd)); imm(ci_imm);
          return true;
        case 1:
          if (rd == 0) return false;
          name("c.addiw"); dst(X(rd)); isrc(X(rd)); imm(ci_imm);
          return true;
        case 2:
          name("c.li"); dst(X(rd)); imm(ci_imm);
          return true;
        case 3:
          if (ci_uimm == 0) return false;
          if (rd == 2) {
            const std::uint32_t v = (bits(c, 12, 12) << 9) | (bits(c, 6, 6) << 4) |
                                    (bits(c, 5, 5) << 6) | (bits(c, 4, 3) << 7) |
                                    (bits(c, 2, 2) << 5);
            name("c.addi16sp"); dst(X(2)); isrc(X(2)); imm(sext(v, 10));
            return true;
          }
          name("c.lui"); dst(X(rd)); imm(static_cast<std::uint64_t>(ci_imm) & 0xfffff);
          return true;
        case 4: {
          const std::uint32_t sub = bits(c, 11, 10);
          if (sub == 0 || sub == 1) {
            name(sub == 0 ? "c.srli" : "c.srai");
            dst(X(rs1p)); isrc(X(rs1p)); imm(ci_uimm);
            return true;
          }
          if (sub == 2) {
            name("c.andi"); dst(X(rs1p)); isrc(X(rs1p)); imm(ci_imm);
            return true;
          }
          static constexpr std::string_view kOps[2][4] = {
              {"c.sub", "c.xor", "c.or", "c.and"}, {"c.subw", "c.addw", "", ""}};
          const std::string_view n = kOps[bits(c, 12, 12)][bits(c, 6, 5)];
          if (n.empty()) return false;
          name(n); dst(X(rs1p)); isrc(X(rs1p)); src(X(rdp));
          return true;
        }
        case 5: {
          const std::uint32_t off = (bits(c, 12, 12) << 11) | (bits(c, 11, 11) << 4) |
                                    (bits(c, 10, 9) << 8) | (bits(c, 8, 8) << 10) |
                                    (bits(c, 7, 7) << 6) | (bits(c, 6, 6) << 7) |
                                    (bits(c, 5, 3) << 1) | (bits(c, 2, 2) << 5);
          name("c.j"); imm(sext(off, 12));
          return true;
        }
        default: {
          const std::uint32_t off = (bits(c, 12, 12) << 8) | (bits(c, 11, 10) << 3) |
                                    (bits(c, 6, 5) << 6) | (bits(c, 4, 3) << 1) |
                                    (bits(c, 2, 2) << 5);
          name(f3 == 6 ? "c.beqz" : "c.bnez"); src(X(rs1p)); imm(sext(off, 9));
          return true;
        }
      }
    case 2:
      switch (f3) {
        case 0:
          name("c.slli"); dst(X(rd)); isrc(X(rd)); imm(ci_uimm);
          return true;
        case 1: {
          const std::uint32_t off = (bits(c, 12, 12) << 5) | (bits(c, 6, 5) << 3) | (bits(c, 4, 2) << 6);
          name("c.fldsp"); dst(F(rd)); mem(X(2), off);
          return true;
        }
        case 2: {
          if (rd == 0) return false;
          const std::uint32_t off = (bits(c, 12, 12) << 5) | (bits(c, 6, 4) << 2) | (bits(c, 3, 2) << 6);
          name("c.lwsp"); dst(X(rd)); mem(X(2), off);
          return true;
        }
        case 3: {
          if (rd == 0) return false;
          const std::uint32_t off = (bits(c, 12, 12) << 5) | (bits(c, 6, 5) << 3) | (bits(c, 4, 2) << 6);
          name("c.ldsp"); dst(X(rd)); mem(X(2), off);
          return true;
        }
        case 4:
          if (bits(c, 12, 12) == 0) {
            if (rs2 == 0) {
              if (rd == 0) return false;
              name("c.jr"); src(X(rd));
              return true;
            }
            name("c.mv"); dst(X(rd)); src(X(rs2));
            return true;
          }
          if (rs2 == 0) {
            if (rd == 0) {
              name("c.ebreak");
              return true;
            }
            name("c.jalr");
            if (detail) b.implicit_dst(X(1));
            src(X(rd));
            return true;
          }
          name("c.add"); dst(X(rd)); isrc(X(rd)); src(X(rs2));
          return true;
        case 5: {
          const std::uint32_t off = (bits(c, 12, 10) << 3) | (bits(c, 9, 7) << 6);
          name("c.fsdsp"); src(F(rs2)); mem(X(2), off);
          return true;
        }
        case 6: {
          const std::uint32_t off = (bits(c, 12, 9) << 2) | (bits(c, 8, 7) << 6);
          name("c.swsp"); src(X(rs2)); mem(X(2), off);
          return true;
        }
        default: {
          const std::uint32_t off = (bits(c, 12, 10) << 3) | (bits(c, 9, 7) << 6);
          name("c.sdsp"); src(X(rs2)); mem(X(2), off);
          return true;
        }
      }
    default:
      return false;
  }
}

}  // namespace rave::detail
