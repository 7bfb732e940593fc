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

// OP-V (major opcode 1010111) funct6 tables for RVV 1.0 and RVV 0.7.1.
//
// One row per (funct6, operand group, form subset). Rows carrying the
// vectorization class of the instruction: compares are ARITH, merges and
// scalar/vector moves are OTHER, mask-register bookkeeping is MASK.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "rave/isa.hpp"

namespace rave::detail {

// OPIxx, OPMxx, OPFxx.
enum class OpGroup : std::uint8_t { I, M, F };

// Form bits: which funct3 variants exist for the row.
inline constexpr std::uint8_t kVV = 1;  // OPIVV / OPMVV / OPFVV
inline constexpr std::uint8_t kVX = 2;  // OPIVX / OPMVX
inline constexpr std::uint8_t kVI = 4;  // OPIVI
inline constexpr std::uint8_t kVF = 8;  // OPFVF

enum class Shape : std::uint8_t {
  Binary,       // vd, vs2, {vs1|rs1|simm5|fs1}
  BinaryUimm,   // vd, vs2, {vs1|rs1|uimm5}
  Narrow,       // .wv/.wx/.wi, uimm5
  WideW,        // .wv/.wx/.wf
  Reduction,    // .vs
  MulAdd,       // vd, {vs1|rs1|fs1}, vs2
  CarryIn,      // .vvm/.vxm/.vim with v0, vm=0 only
  CarryOut,     // vm=0: .v?m with v0; vm=1: .v? (1.0 only)
  Merge,        // vmerge.v?m / vmv.v.?
  FMerge,       // vfmerge.vfm / vfmv.v.f
  MaskLogical,  // .mm
  Compress,     // vcompress.vm
  WholeMove,    // vmv<nr>r.v
  ExtXV,        // vext.x.v rd, vs2, rs1 (0.7.1)
  UnaryVs1,     // selector in vs1 field, see UnaryTable
  UnaryVs2,     // selector in vs2 field, see UnaryTable
};

enum class UnaryForm : std::uint8_t {
  XfromV,  // rd, vs2
  FfromV,  // fd, vs2
  VfromV,  // vd, vs2
  VOnly,   // vd
  VfromX,  // vd, rs1
  VfromF,  // vd, fs1
};

struct UnaryEntry {
  std::uint8_t selector;
  std::string_view name;
  UnaryForm form;
  VMajor major;
  VMinor minor;
  bool maskable;
};

enum class UnaryTable : std::uint8_t {
  None,
  Vwxunary0,
  Vrxunary0,
  Vxunary0,
  Vmunary0,
  Vwfunary0,
  Vrfunary0,
  Vfunary0,
  Vfunary1,
  Popc071,
  First071,
  Vfunary0_071,
  Vfunary1_071,
};

struct OpvEntry {
  std::uint8_t funct6;
  OpGroup group;
  std::uint8_t forms;
  std::string_view name;
  VMajor major;
  VMinor minor;
  Shape shape;
  UnaryTable unary = UnaryTable::None;
};

inline constexpr VMajor A = VMajor::Arith;
inline constexpr VMajor K = VMajor::Mask;
inline constexpr VMajor O = VMajor::Other;
inline constexpr VMinor kInt = VMinor::Int;
inline constexpr VMinor kFp = VMinor::Fp;
inline constexpr VMinor kNo = VMinor::NoType;

// clang-format off
inline constexpr UnaryEntry kVwxunary0[] = {
    {0b00000, "vmv.x.s", UnaryForm::XfromV, O, kNo, false},
    {0b10000, "vcpop.m", UnaryForm::XfromV, K, kNo, true},
    {0b10001, "vfirst.m", UnaryForm::XfromV, K, kNo, true},
};
inline constexpr UnaryEntry kVrxunary0[] = {
    {0b00000, "vmv.s.x", UnaryForm::VfromX, O, kNo, false},
};
inline constexpr UnaryEntry kVxunary0[] = {
    {0b00010, "vzext.vf8", UnaryForm::VfromV, A, kInt, true},
    {0b00011, "vsext.vf8", UnaryForm::VfromV, A, kInt, true},
    {0b00100, "vzext.vf4", UnaryForm::VfromV, A, kInt, true},
    {0b00101, "vsext.vf4", UnaryForm::VfromV, A, kInt, true},
    {0b00110, "vzext.vf2", UnaryForm::VfromV, A, kInt, true},
    {0b00111, "vsext.vf2", UnaryForm::VfromV, A, kInt, true},
};
inline constexpr UnaryEntry kVmunary0[] = {
    {0b00001, "vmsbf.m", UnaryForm::VfromV, K, kNo, true},
    {0b00010, "vmsof.m", UnaryForm::VfromV, K, kNo, true},
    {0b00011, "vmsif.m", UnaryForm::VfromV, K, kNo, true},
    {0b10000, "viota.m", UnaryForm::VfromV, K, kNo, true},
    {0b10001, "vid.v", UnaryForm::VOnly, K, kNo, true},
};
inline constexpr UnaryEntry kVwfunary0[] = {
    {0b00000, "vfmv.f.s", UnaryForm::FfromV, O, kNo, false},
};
inline constexpr UnaryEntry kVrfunary0[] = {
    {0b00000, "vfmv.s.f", UnaryForm::VfromF, O, kNo, false},
};
inline constexpr UnaryEntry kVfunary0[] = {
    {0b00000, "vfcvt.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b00001, "vfcvt.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b00010, "vfcvt.f.xu.v", UnaryForm::VfromV, A, kFp, true},
    {0b00011, "vfcvt.f.x.v", UnaryForm::VfromV, A, kFp, true},
    {0b00110, "vfcvt.rtz.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b00111, "vfcvt.rtz.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01000, "vfwcvt.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01001, "vfwcvt.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01010, "vfwcvt.f.xu.v", UnaryForm::VfromV, A, kFp, true},
    {0b01011, "vfwcvt.f.x.v", UnaryForm::VfromV, A, kFp, true},
    {0b01100, "vfwcvt.f.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01110, "vfwcvt.rtz.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01111, "vfwcvt.rtz.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b10000, "vfncvt.xu.f.w", UnaryForm::VfromV, A, kFp, true},
    {0b10001, "vfncvt.x.f.w", UnaryForm::VfromV, A, kFp, true},
    {0b10010, "vfncvt.f.xu.w", UnaryForm::VfromV, A, kFp, true},
    {0b10011, "vfncvt.f.x.w", UnaryForm::VfromV, A, kFp, true},
    {0b10100, "vfncvt.f.f.w", UnaryForm::VfromV, A, kFp, true},
    {0b10101, "vfncvt.rod.f.f.w", UnaryForm::VfromV, A, kFp, true},
    {0b10110, "vfncvt.rtz.xu.f.w", UnaryForm::VfromV, A, kFp, true},
    {0b10111, "vfncvt.rtz.x.f.w", UnaryForm::VfromV, A, kFp, true},
};
inline constexpr UnaryEntry kVfunary1[] = {
    {0b00000, "vfsqrt.v", UnaryForm::VfromV, A, kFp, true},
    {0b00100, "vfrsqrt7.v", UnaryForm::VfromV, A, kFp, true},
    {0b00101, "vfrec7.v", UnaryForm::VfromV, A, kFp, true},
    {0b10000, "vfclass.v", UnaryForm::VfromV, A, kFp, true},
};
inline constexpr UnaryEntry kPopc071[] = {
    {0b00000, "vmpopc.m", UnaryForm::XfromV, K, kNo, true},
};
inline constexpr UnaryEntry kFirst071[] = {
    {0b00000, "vmfirst.m", UnaryForm::XfromV, K, kNo, true},
};
inline constexpr UnaryEntry kVfunary0_071[] = {
    {0b00000, "vfcvt.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b00001, "vfcvt.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b00010, "vfcvt.f.xu.v", UnaryForm::VfromV, A, kFp, true},
    {0b00011, "vfcvt.f.x.v", UnaryForm::VfromV, A, kFp, true},
    {0b01000, "vfwcvt.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01001, "vfwcvt.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b01010, "vfwcvt.f.xu.v", UnaryForm::VfromV, A, kFp, true},
    {0b01011, "vfwcvt.f.x.v", UnaryForm::VfromV, A, kFp, true},
    {0b01100, "vfwcvt.f.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b10000, "vfncvt.xu.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b10001, "vfncvt.x.f.v", UnaryForm::VfromV, A, kFp, true},
    {0b10010, "vfncvt.f.xu.v", UnaryForm::VfromV, A, kFp, true},
    {0b10011, "vfncvt.f.x.v", UnaryForm::VfromV, A, kFp, true},
    {0b10100, "vfncvt.f.f.v", UnaryForm::VfromV, A, kFp, true},
};
inline constexpr UnaryEntry kVfunary1_071[] = {
    {0b00000, "vfsqrt.v", UnaryForm::VfromV, A, kFp, true},
    {0b10000, "vfclass.v", UnaryForm::VfromV, A, kFp, true},
};

inline constexpr std::span<const UnaryEntry> unary_table(UnaryTable t) {
  switch (t) {
    case UnaryTable::Vwxunary0: return kVwxunary0;
    case UnaryTable::Vrxunary0: return kVrxunary0;
    case UnaryTable::Vxunary0: return kVxunary0;
    case UnaryTable::Vmunary0: return kVmunary0;
    case UnaryTable::Vwfunary0: return kVwfunary0;
    case UnaryTable::Vrfunary0: return kVrfunary0;
    case UnaryTable::Vfunary0: return kVfunary0;
    case UnaryTable::Vfunary1: return kVfunary1;
    case UnaryTable::Popc071: return kPopc071;
    case UnaryTable::First071: return kFirst071;
    case UnaryTable::Vfunary0_071: return kVfunary0_071;
    case UnaryTable::Vfunary1_071: return kVfunary1_071;
    case UnaryTable::None: break;
  }
  return {};
}

using G = OpGroup;
using S = Shape;

inline constexpr OpvEntry kOpvV1_0[] = {
    // OPI
    {0b000000, G::I, kVV | kVX | kVI, "vadd", A, kInt, S::Binary},
    {0b000010, G::I, kVV | kVX, "vsub", A, kInt, S::Binary},
    {0b000011, G::I, kVX | kVI, "vrsub", A, kInt, S::Binary},
    {0b000100, G::I, kVV | kVX, "vminu", A, kInt, S::Binary},
    {0b000101, G::I, kVV | kVX, "vmin", A, kInt, S::Binary},
    {0b000110, G::I, kVV | kVX, "vmaxu", A, kInt, S::Binary},
    {0b000111, G::I, kVV | kVX, "vmax", A, kInt, S::Binary},
    {0b001001, G::I, kVV | kVX | kVI, "vand", A, kInt, S::Binary},
    {0b001010, G::I, kVV | kVX | kVI, "vor", A, kInt, S::Binary},
    {0b001011, G::I, kVV | kVX | kVI, "vxor", A, kInt, S::Binary},
    {0b001100, G::I, kVV | kVX | kVI, "vrgather", O, kNo, S::BinaryUimm},
    {0b001110, G::I, kVV, "vrgatherei16", O, kNo, S::Binary},
    {0b001110, G::I, kVX | kVI, "vslideup", O, kNo, S::BinaryUimm},
    {0b001111, G::I, kVX | kVI, "vslidedown", O, kNo, S::BinaryUimm},
    {0b010000, G::I, kVV | kVX | kVI, "vadc", A, kInt, S::CarryIn},
    {0b010001, G::I, kVV | kVX | kVI, "vmadc", A, kInt, S::CarryOut},
    {0b010010, G::I, kVV | kVX, "vsbc", A, kInt, S::CarryIn},
    {0b010011, G::I, kVV | kVX, "vmsbc", A, kInt, S::CarryOut},
    {0b010111, G::I, kVV | kVX | kVI, "vmerge", O, kNo, S::Merge},
    {0b011000, G::I, kVV | kVX | kVI, "vmseq", A, kInt, S::Binary},
    {0b011001, G::I, kVV | kVX | kVI, "vmsne", A, kInt, S::Binary},
    {0b011010, G::I, kVV | kVX, "vmsltu", A, kInt, S::Binary},
    {0b011011, G::I, kVV | kVX, "vmslt", A, kInt, S::Binary},
    {0b011100, G::I, kVV | kVX | kVI, "vmsleu", A, kInt, S::Binary},
    {0b011101, G::I, kVV | kVX | kVI, "vmsle", A, kInt, S::Binary},
    {0b011110, G::I, kVX | kVI, "vmsgtu", A, kInt, S::Binary},
    {0b011111, G::I, kVX | kVI, "vmsgt", A, kInt, S::Binary},
    {0b100000, G::I, kVV | kVX | kVI, "vsaddu", A, kInt, S::Binary},
    {0b100001, G::I, kVV | kVX | kVI, "vsadd", A, kInt, S::Binary},
    {0b100010, G::I, kVV | kVX, "vssubu", A, kInt, S::Binary},
    {0b100011, G::I, kVV | kVX, "vssub", A, kInt, S::Binary},
    {0b100101, G::I, kVV | kVX | kVI, "vsll", A, kInt, S::BinaryUimm},
    {0b100111, G::I, kVV | kVX, "vsmul", A, kInt, S::Binary},
    {0b100111, G::I, kVI, "vmv", O, kNo, S::WholeMove},
    {0b101000, G::I, kVV | kVX | kVI, "vsrl", A, kInt, S::BinaryUimm},
    {0b101001, G::I, kVV | kVX | kVI, "vsra", A, kInt, S::BinaryUimm},
    {0b101010, G::I, kVV | kVX | kVI, "vssrl", A, kInt, S::BinaryUimm},
    {0b101011, G::I, kVV | kVX | kVI, "vssra", A, kInt, S::BinaryUimm},
    {0b101100, G::I, kVV | kVX | kVI, "vnsrl", A, kInt, S::Narrow},
    {0b101101, G::I, kVV | kVX | kVI, "vnsra", A, kInt, S::Narrow},
    {0b101110, G::I, kVV | kVX | kVI, "vnclipu", A, kInt, S::Narrow},
    {0b101111, G::I, kVV | kVX | kVI, "vnclip", A, kInt, S::Narrow},
    {0b110000, G::I, kVV, "vwredsumu", A, kInt, S::Reduction},
    {0b110001, G::I, kVV, "vwredsum", A, kInt, S::Reduction},
    // OPM
    {0b000000, G::M, kVV, "vredsum", A, kInt, S::Reduction},
    {0b000001, G::M, kVV, "vredand", A, kInt, S::Reduction},
    {0b000010, G::M, kVV, "vredor", A, kInt, S::Reduction},
    {0b000011, G::M, kVV, "vredxor", A, kInt, S::Reduction},
    {0b000100, G::M, kVV, "vredminu", A, kInt, S::Reduction},
    {0b000101, G::M, kVV, "vredmin", A, kInt, S::Reduction},
    {0b000110, G::M, kVV, "vredmaxu", A, kInt, S::Reduction},
    {0b000111, G::M, kVV, "vredmax", A, kInt, S::Reduction},
    {0b001000, G::M, kVV | kVX, "vaaddu", A, kInt, S::Binary},
    {0b001001, G::M, kVV | kVX, "vaadd", A, kInt, S::Binary},
    {0b001010, G::M, kVV | kVX, "vasubu", A, kInt, S::Binary},
    {0b001011, G::M, kVV | kVX, "vasub", A, kInt, S::Binary},
    {0b001110, G::M, kVX, "vslide1up", O, kNo, S::Binary},
    {0b001111, G::M, kVX, "vslide1down", O, kNo, S::Binary},
    {0b010000, G::M, kVV, "", O, kNo, S::UnaryVs1, UnaryTable::Vwxunary0},
    {0b010000, G::M, kVX, "", O, kNo, S::UnaryVs2, UnaryTable::Vrxunary0},
    {0b010010, G::M, kVV, "", A, kInt, S::UnaryVs1, UnaryTable::Vxunary0},
    {0b010100, G::M, kVV, "", K, kNo, S::UnaryVs1, UnaryTable::Vmunary0},
    {0b010111, G::M, kVV, "vcompress", O, kNo, S::Compress},
    {0b011000, G::M, kVV, "vmandn", K, kNo, S::MaskLogical},
    {0b011001, G::M, kVV, "vmand", K, kNo, S::MaskLogical},
    {0b011010, G::M, kVV, "vmor", K, kNo, S::MaskLogical},
    {0b011011, G::M, kVV, "vmxor", K, kNo, S::MaskLogical},
    {0b011100, G::M, kVV, "vmorn", K, kNo, S::MaskLogical},
    {0b011101, G::M, kVV, "vmnand", K, kNo, S::MaskLogical},
    {0b011110, G::M, kVV, "vmnor", K, kNo, S::MaskLogical},
    {0b011111, G::M, kVV, "vmxnor", K, kNo, S::MaskLogical},
    {0b100000, G::M, kVV | kVX, "vdivu", A, kInt, S::Binary},
    {0b100001, G::M, kVV | kVX, "vdiv", A, kInt, S::Binary},
    {0b100010, G::M, kVV | kVX, "vremu", A, kInt, S::Binary},
    {0b100011, G::M, kVV | kVX, "vrem", A, kInt, S::Binary},
    {0b100100, G::M, kVV | kVX, "vmulhu", A, kInt, S::Binary},
    {0b100101, G::M, kVV | kVX, "vmul", A, kInt, S::Binary},
    {0b100110, G::M, kVV | kVX, "vmulhsu", A, kInt, S::Binary},
    {0b100111, G::M, kVV | kVX, "vmulh", A, kInt, S::Binary},
    {0b101001, G::M, kVV | kVX, "vmadd", A, kInt, S::MulAdd},
    {0b101011, G::M, kVV | kVX, "vnmsub", A, kInt, S::MulAdd},
    {0b101101, G::M, kVV | kVX, "vmacc", A, kInt, S::MulAdd},
    {0b101111, G::M, kVV | kVX, "vnmsac", A, kInt, S::MulAdd},
    {0b110000, G::M, kVV | kVX, "vwaddu", A, kInt, S::Binary},
    {0b110001, G::M, kVV | kVX, "vwadd", A, kInt, S::Binary},
    {0b110010, G::M, kVV | kVX, "vwsubu", A, kInt, S::Binary},
    {0b110011, G::M, kVV | kVX, "vwsub", A, kInt, S::Binary},
    {0b110100, G::M, kVV | kVX, "vwaddu", A, kInt, S::WideW},
    {0b110101, G::M, kVV | kVX, "vwadd", A, kInt, S::WideW},
    {0b110110, G::M, kVV | kVX, "vwsubu", A, kInt, S::WideW},
    {0b110111, G::M, kVV | kVX, "vwsub", A, kInt, S::WideW},
    {0b111000, G::M, kVV | kVX, "vwmulu", A, kInt, S::Binary},
    {0b111010, G::M, kVV | kVX, "vwmulsu", A, kInt, S::Binary},
    {0b111011, G::M, kVV | kVX, "vwmul", A, kInt, S::Binary},
    {0b111100, G::M, kVV | kVX, "vwmaccu", A, kInt, S::MulAdd},
    {0b111101, G::M, kVV | kVX, "vwmacc", A, kInt, S::MulAdd},
    {0b111110, G::M, kVX, "vwmaccus", A, kInt, S::MulAdd},
    {0b111111, G::M, kVV | kVX, "vwmaccsu", A, kInt, S::MulAdd},
    // OPF
    {0b000000, G::F, kVV | kVF, "vfadd", A, kFp, S::Binary},
    {0b000001, G::F, kVV, "vfredusum", A, kFp, S::Reduction},
    {0b000010, G::F, kVV | kVF, "vfsub", A, kFp, S::Binary},
    {0b000011, G::F, kVV, "vfredosum", A, kFp, S::Reduction},
    {0b000100, G::F, kVV | kVF, "vfmin", A, kFp, S::Binary},
    {0b000101, G::F, kVV, "vfredmin", A, kFp, S::Reduction},
    {0b000110, G::F, kVV | kVF, "vfmax", A, kFp, S::Binary},
    {0b000111, G::F, kVV, "vfredmax", A, kFp, S::Reduction},
    {0b001000, G::F, kVV | kVF, "vfsgnj", A, kFp, S::Binary},
    {0b001001, G::F, kVV | kVF, "vfsgnjn", A, kFp, S::Binary},
    {0b001010, G::F, kVV | kVF, "vfsgnjx", A, kFp, S::Binary},
    {0b001110, G::F, kVF, "vfslide1up", O, kNo, S::Binary},
    {0b001111, G::F, kVF, "vfslide1down", O, kNo, S::Binary},
    {0b010000, G::F, kVV, "", O, kNo, S::UnaryVs1, UnaryTable::Vwfunary0},
    {0b010000, G::F, kVF, "", O, kNo, S::UnaryVs2, UnaryTable::Vrfunary0},
    {0b010010, G::F, kVV, "", A, kFp, S::UnaryVs1, UnaryTable::Vfunary0},
    {0b010011, G::F, kVV, "", A, kFp, S::UnaryVs1, UnaryTable::Vfunary1},
    {0b010111, G::F, kVF, "vfmerge", O, kNo, S::FMerge},
    {0b011000, G::F, kVV | kVF, "vmfeq", A, kFp, S::Binary},
    {0b011001, G::F, kVV | kVF, "vmfle", A, kFp, S::Binary},
    {0b011011, G::F, kVV | kVF, "vmflt", A, kFp, S::Binary},
    {0b011100, G::F, kVV | kVF, "vmfne", A, kFp, S::Binary},
    {0b011101, G::F, kVF, "vmfgt", A, kFp, S::Binary},
    {0b011111, G::F, kVF, "vmfge", A, kFp, S::Binary},
    {0b100000, G::F, kVV | kVF, "vfdiv", A, kFp, S::Binary},
    {0b100001, G::F, kVF, "vfrdiv", A, kFp, S::Binary},
    {0b100100, G::F, kVV | kVF, "vfmul", A, kFp, S::Binary},
    {0b100111, G::F, kVF, "vfrsub", A, kFp, S::Binary},
    {0b101000, G::F, kVV | kVF, "vfmadd", A, kFp, S::MulAdd},
    {0b101001, G::F, kVV | kVF, "vfnmadd", A, kFp, S::MulAdd},
    {0b101010, G::F, kVV | kVF, "vfmsub", A, kFp, S::MulAdd},
    {0b101011, G::F, kVV | kVF, "vfnmsub", A, kFp, S::MulAdd},
    {0b101100, G::F, kVV | kVF, "vfmacc", A, kFp, S::MulAdd},
    {0b101101, G::F, kVV | kVF, "vfnmacc", A, kFp, S::MulAdd},
    {0b101110, G::F, kVV | kVF, "vfmsac", A, kFp, S::MulAdd},
    {0b101111, G::F, kVV | kVF, "vfnmsac", A, kFp, S::MulAdd},
    {0b110000, G::F, kVV | kVF, "vfwadd", A, kFp, S::Binary},
    {0b110001, G::F, kVV, "vfwredusum", A, kFp, S::Reduction},
    {0b110010, G::F, kVV | kVF, "vfwsub", A, kFp, S::Binary},
    {0b110011, G::F, kVV, "vfwredosum", A, kFp, S::Reduction},
    {0b110100, G::F, kVV | kVF, "vfwadd", A, kFp, S::WideW},
    {0b110110, G::F, kVV | kVF, "vfwsub", A, kFp, S::WideW},
    {0b111000, G::F, kVV | kVF, "vfwmul", A, kFp, S::Binary},
    {0b111100, G::F, kVV | kVF, "vfwmacc", A, kFp, S::MulAdd},
    {0b111101, G::F, kVV | kVF, "vfwnmacc", A, kFp, S::MulAdd},
    {0b111110, G::F, kVV | kVF, "vfwmsac", A, kFp, S::MulAdd},
    {0b111111, G::F, kVV | kVF, "vfwnmsac", A, kFp, S::MulAdd},
};

inline constexpr OpvEntry kOpvV0_7_1[] = {
    // OPI
    {0b000000, G::I, kVV | kVX | kVI, "vadd", A, kInt, S::Binary},
    {0b000010, G::I, kVV | kVX, "vsub", A, kInt, S::Binary},
    {0b000011, G::I, kVX | kVI, "vrsub", A, kInt, S::Binary},
    {0b000100, G::I, kVV | kVX, "vminu", A, kInt, S::Binary},
    {0b000101, G::I, kVV | kVX, "vmin", A, kInt, S::Binary},
    {0b000110, G::I, kVV | kVX, "vmaxu", A, kInt, S::Binary},
    {0b000111, G::I, kVV | kVX, "vmax", A, kInt, S::Binary},
    {0b001001, G::I, kVV | kVX | kVI, "vand", A, kInt, S::Binary},
    {0b001010, G::I, kVV | kVX | kVI, "vor", A, kInt, S::Binary},
    {0b001011, G::I, kVV | kVX | kVI, "vxor", A, kInt, S::Binary},
    {0b001100, G::I, kVV | kVX | kVI, "vrgather", O, kNo, S::BinaryUimm},
    {0b001110, G::I, kVX | kVI, "vslideup", O, kNo, S::BinaryUimm},
    {0b001111, G::I, kVX | kVI, "vslidedown", O, kNo, S::BinaryUimm},
    {0b010000, G::I, kVV | kVX | kVI, "vadc", A, kInt, S::CarryIn},
    {0b010001, G::I, kVV | kVX | kVI, "vmadc", A, kInt, S::CarryOut},
    {0b010010, G::I, kVV | kVX, "vsbc", A, kInt, S::CarryIn},
    {0b010011, G::I, kVV | kVX, "vmsbc", A, kInt, S::CarryOut},
    {0b010111, G::I, kVV | kVX | kVI, "vmerge", O, kNo, S::Merge},
    {0b011000, G::I, kVV | kVX | kVI, "vmseq", A, kInt, S::Binary},
    {0b011001, G::I, kVV | kVX | kVI, "vmsne", A, kInt, S::Binary},
    {0b011010, G::I, kVV | kVX, "vmsltu", A, kInt, S::Binary},
    {0b011011, G::I, kVV | kVX, "vmslt", A, kInt, S::Binary},
    {0b011100, G::I, kVV | kVX | kVI, "vmsleu", A, kInt, S::Binary},
    {0b011101, G::I, kVV | kVX | kVI, "vmsle", A, kInt, S::Binary},
    {0b011110, G::I, kVX | kVI, "vmsgtu", A, kInt, S::Binary},
    {0b011111, G::I, kVX | kVI, "vmsgt", A, kInt, S::Binary},
    {0b100000, G::I, kVV | kVX | kVI, "vsaddu", A, kInt, S::Binary},
    {0b100001, G::I, kVV | kVX | kVI, "vsadd", A, kInt, S::Binary},
    {0b100010, G::I, kVV | kVX, "vssubu", A, kInt, S::Binary},
    {0b100011, G::I, kVV | kVX, "vssub", A, kInt, S::Binary},
    {0b100100, G::I, kVV | kVX | kVI, "vaadd", A, kInt, S::Binary},
    {0b100101, G::I, kVV | kVX | kVI, "vsll", A, kInt, S::BinaryUimm},
    {0b100110, G::I, kVV | kVX, "vasub", A, kInt, S::Binary},
    {0b100111, G::I, kVV | kVX, "vsmul", A, kInt, S::Binary},
    {0b101000, G::I, kVV | kVX | kVI, "vsrl", A, kInt, S::BinaryUimm},
    {0b101001, G::I, kVV | kVX | kVI, "vsra", A, kInt, S::BinaryUimm},
    {0b101010, G::I, kVV | kVX | kVI, "vssrl", A, kInt, S::BinaryUimm},
    {0b101011, G::I, kVV | kVX | kVI, "vssra", A, kInt, S::BinaryUimm},
    {0b101100, G::I, kVV | kVX | kVI, "vnsrl", A, kInt, S::BinaryUimm},
    {0b101101, G::I, kVV | kVX | kVI, "vnsra", A, kInt, S::BinaryUimm},
    {0b101110, G::I, kVV | kVX | kVI, "vnclipu", A, kInt, S::BinaryUimm},
    {0b101111, G::I, kVV | kVX | kVI, "vnclip", A, kInt, S::BinaryUimm},
    {0b110000, G::I, kVV, "vwredsumu", A, kInt, S::Reduction},
    {0b110001, G::I, kVV, "vwredsum", A, kInt, S::Reduction},
    // OPM
    {0b000000, G::M, kVV, "vredsum", A, kInt, S::Reduction},
    {0b000001, G::M, kVV, "vredand", A, kInt, S::Reduction},
    {0b000010, G::M, kVV, "vredor", A, kInt, S::Reduction},
    {0b000011, G::M, kVV, "vredxor", A, kInt, S::Reduction},
    {0b000100, G::M, kVV, "vredminu", A, kInt, S::Reduction},
    {0b000101, G::M, kVV, "vredmin", A, kInt, S::Reduction},
    {0b000110, G::M, kVV, "vredmaxu", A, kInt, S::Reduction},
    {0b000111, G::M, kVV, "vredmax", A, kInt, S::Reduction},
    {0b001100, G::M, kVV, "vext.x.v", O, kNo, S::ExtXV},
    {0b001101, G::M, kVX, "", O, kNo, S::UnaryVs2, UnaryTable::Vrxunary0},
    {0b001110, G::M, kVX, "vslide1up", O, kNo, S::Binary},
    {0b001111, G::M, kVX, "vslide1down", O, kNo, S::Binary},
    {0b010100, G::M, kVV, "", K, kNo, S::UnaryVs1, UnaryTable::Popc071},
    {0b010101, G::M, kVV, "", K, kNo, S::UnaryVs1, UnaryTable::First071},
    {0b010110, G::M, kVV, "", K, kNo, S::UnaryVs1, UnaryTable::Vmunary0},
    {0b010111, G::M, kVV, "vcompress", O, kNo, S::Compress},
    {0b011000, G::M, kVV, "vmandnot", K, kNo, S::MaskLogical},
    {0b011001, G::M, kVV, "vmand", K, kNo, S::MaskLogical},
    {0b011010, G::M, kVV, "vmor", K, kNo, S::MaskLogical},
    {0b011011, G::M, kVV, "vmxor", K, kNo, S::MaskLogical},
    {0b011100, G::M, kVV, "vmornot", K, kNo, S::MaskLogical},
    {0b011101, G::M, kVV, "vmnand", K, kNo, S::MaskLogical},
    {0b011110, G::M, kVV, "vmnor", K, kNo, S::MaskLogical},
    {0b011111, G::M, kVV, "vmxnor", K, kNo, S::MaskLogical},
    {0b100000, G::M, kVV | kVX, "vdivu", A, kInt, S::Binary},
    {0b100001, G::M, kVV | kVX, "vdiv", A, kInt, S::Binary},
    {0b100010, G::M, kVV | kVX, "vremu", A, kInt, S::Binary},
    {0b100011, G::M, kVV | kVX, "vrem", A, kInt, S::Binary},
    {0b100100, G::M, kVV | kVX, "vmulhu", A, kInt, S::Binary},
    {0b100101, G::M, kVV | kVX, "vmul", A, kInt, S::Binary},
    {0b100110, G::M, kVV | kVX, "vmulhsu", A, kInt, S::Binary},
    {0b100111, G::M, kVV | kVX, "vmulh", A, kInt, S::Binary},
    {0b101001, G::M, kVV | kVX, "vmadd", A, kInt, S::MulAdd},
    {0b101011, G::M, kVV | kVX, "vnmsub", A, kInt, S::MulAdd},
    {0b101101, G::M, kVV | kVX, "vmacc", A, kInt, S::MulAdd},
    {0b101111, G::M, kVV | kVX, "vnmsac", A, kInt, S::MulAdd},
    {0b110000, G::M, kVV | kVX, "vwaddu", A, kInt, S::Binary},
    {0b110001, G::M, kVV | kVX, "vwadd", A, kInt, S::Binary},
    {0b110010, G::M, kVV | kVX, "vwsubu", A, kInt, S::Binary},
    {0b110011, G::M, kVV | kVX, "vwsub", A, kInt, S::Binary},
    {0b110100, G::M, kVV | kVX, "vwaddu", A, kInt, S::WideW},
    {0b110101, G::M, kVV | kVX, "vwadd", A, kInt, S::WideW},
    {0b110110, G::M, kVV | kVX, "vwsubu", A, kInt, S::WideW},
    {0b110111, G::M, kVV | kVX, "vwsub", A, kInt, S::WideW},
    {0b111000, G::M, kVV | kVX, "vwmulu", A, kInt, S::Binary},
    {0b111010, G::M, kVV | kVX, "vwmulsu", A, kInt, S::Binary},
    {0b111011, G::M, kVV | kVX, "vwmul", A, kInt, S::Binary},
    {0b111100, G::M, kVV | kVX, "vwmaccu", A, kInt, S::MulAdd},
    {0b111101, G::M, kVV | kVX, "vwmacc", A, kInt, S::MulAdd},
    {0b111110, G::M, kVX, "vwmaccus", A, kInt, S::MulAdd},
    {0b111111, G::M, kVV | kVX, "vwmaccsu", A, kInt, S::MulAdd},
    // OPF
    {0b000000, G::F, kVV | kVF, "vfadd", A, kFp, S::Binary},
    {0b000001, G::F, kVV, "vfredsum", A, kFp, S::Reduction},
    {0b000010, G::F, kVV | kVF, "vfsub", A, kFp, S::Binary},
    {0b000011, G::F, kVV, "vfredosum", A, kFp, S::Reduction},
    {0b000100, G::F, kVV | kVF, "vfmin", A, kFp, S::Binary},
    {0b000101, G::F, kVV, "vfredmin", A, kFp, S::Reduction},
    {0b000110, G::F, kVV | kVF, "vfmax", A, kFp, S::Binary},
    {0b000111, G::F, kVV, "vfredmax", A, kFp, S::Reduction},
    {0b001000, G::F, kVV | kVF, "vfsgnj", A, kFp, S::Binary},
    {0b001001, G::F, kVV | kVF, "vfsgnjn", A, kFp, S::Binary},
    {0b001010, G::F, kVV | kVF, "vfsgnjx", A, kFp, S::Binary},
    {0b001100, G::F, kVV, "", O, kNo, S::UnaryVs1, UnaryTable::Vwfunary0},
    {0b001101, G::F, kVF, "", O, kNo, S::UnaryVs2, UnaryTable::Vrfunary0},
    {0b010111, G::F, kVF, "vfmerge", O, kNo, S::FMerge},
    {0b011000, G::F, kVV | kVF, "vmfeq", A, kFp, S::Binary},
    {0b011001, G::F, kVV | kVF, "vmfle", A, kFp, S::Binary},
    {0b011010, G::F, kVV | kVF, "vmford", A, kFp, S::Binary},
    {0b011011, G::F, kVV | kVF, "vmflt", A, kFp, S::Binary},
    {0b011100, G::F, kVV | kVF, "vmfne", A, kFp, S::Binary},
    {0b011101, G::F, kVF, "vmfgt", A, kFp, S::Binary},
    {0b011111, G::F, kVF, "vmfge", A, kFp, S::Binary},
    {0b100000, G::F, kVV | kVF, "vfdiv", A, kFp, S::Binary},
    {0b100001, G::F, kVF, "vfrdiv", A, kFp, S::Binary},
    {0b100010, G::F, kVV, "", A, kFp, S::UnaryVs1, UnaryTable::Vfunary0_071},
    {0b100011, G::F, kVV, "", A, kFp, S::UnaryVs1, UnaryTable::Vfunary1_071},
    {0b100100, G::F, kVV | kVF, "vfmul", A, kFp, S::Binary},
    {0b100111, G::F, kVF, "vfrsub", A, kFp, S::Binary},
    {0b101000, G::F, kVV | kVF, "vfmadd", A, kFp, S::MulAdd},
    {0b101001, G::F, kVV | kVF, "vfnmadd", A, kFp, S::MulAdd},
    {0b101010, G::F, kVV | kVF, "vfmsub", A, kFp, S::MulAdd},
    {0b101011, G::F, kVV | kVF, "vfnmsub", A, kFp, S::MulAdd},
    {0b101100, G::F, kVV | kVF, "vfmacc", A, kFp, S::MulAdd},
    {0b101101, G::F, kVV | kVF, "vfnmacc", A, kFp, S::MulAdd},
    {0b101110, G::F, kVV | kVF, "vfmsac", A, kFp, S::MulAdd},
    {0b101111, G::F, kVV | kVF, "vfnmsac", A, kFp, S::MulAdd},
    {0b110000, G::F, kVV | kVF, "vfwadd", A, kFp, S::Binary},
    {0b110001, G::F, kVV, "vfwredsum", A, kFp, S::Reduction},
    {0b110010, G::F, kVV | kVF, "vfwsub", A, kFp, S::Binary},
    {0b110011, G::F, kVV, "vfwredosum", A, kFp, S::Reduction},
    {0b110100, G::F, kVV | kVF, "vfwadd", A, kFp, S::WideW},
    {0b110110, G::F, kVV | kVF, "vfwsub", A, kFp, S::WideW},
    {0b111000, G::F, kVV | kVF, "vfwmul", A, kFp, S::Binary},
    {0b111100, G::F, kVV | kVF, "vfwmacc", A, kFp, S::MulAdd},
    {0b111101, G::F, kVV | kVF, "vfwnmacc", A, kFp, S::MulAdd},
    {0b111110, G::F, kVV | kVF, "vfwmsac", A, kFp, S::MulAdd},
    {0b111111, G::F, kVV | kVF, "vfwnmsac", A, kFp, S::MulAdd},
};
// clang-format on

inline constexpr std::span<const OpvEntry> opv_table(SpecVersion spec) {
  if (spec == SpecVersion::V1_0) return kOpvV1_0;
  return kOpvV0_7_1;
}

}  // namespace rave::detail
