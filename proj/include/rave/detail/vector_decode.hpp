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

// Vector arithmetic, configuration and memory decoding.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rave/detail/asm_text.hpp"
#include "rave/detail/rvv_tables.hpp"
#include "rave/detail/vtype.hpp"
#include "rave/isa.hpp"

namespace rave::detail {

inline constexpr std::uint32_t kOpV = 0x57;
inline constexpr std::uint32_t kOpLoadFp = 0x07;
inline constexpr std::uint32_t kOpStoreFp = 0x27;

// Memory width field values that select a vector access.
inline constexpr bool is_vector_width(std::uint32_t width) {
  return width == 0 || width >= 5;
}

inline bool decode_vsetvl(std::uint32_t raw, SpecVersion spec, DecodedInstr& out) {
  const std::uint32_t rd = bits(raw, 11, 7);
  const std::uint32_t rs1 = bits(raw, 19, 15);
  const std::uint32_t rs2 = bits(raw, 24, 20);
  VsetvlFields f;
  f.rd = static_cast<std::uint8_t>(rd);
  AsmBuilder b(out, true);
  const auto X = [](std::uint32_t n) { return RegRef::x(n); };

  if (bits(raw, 31, 31) == 0) {
    f.form = VsetvlForm::Vsetvli;
    f.rs1 = static_cast<std::uint8_t>(rs1);
    f.vtypei = bits(raw, 30, 20);
    b.mnemonic("vsetvli");
    b.dst(X(rd));
    b.src(X(rs1));
    b.raw(vtype_text(f.vtypei, spec, 11));
  } else if (spec == SpecVersion::V1_0 && bits(raw, 31, 30) == 0b11) {
    f.form = VsetvlForm::Vsetivli;
    f.uimm = rs1;
    f.vtypei = bits(raw, 29, 20);
    b.mnemonic("vsetivli");
    b.dst(X(rd));
    b.imm(rs1);
    b.raw(vtype_text(f.vtypei, spec, 10));
  } else if (bits(raw, 30, 25) == 0) {
    f.form = VsetvlForm::Vsetvl;
    f.rs1 = static_cast<std::uint8_t>(rs1);
    f.rs2 = static_cast<std::uint8_t>(rs2);
    b.mnemonic("vsetvl");
    b.dst(X(rd));
    b.src(X(rs1));
    b.src(X(rs2));
  } else {
    return false;
  }
  out.type = InstrType::Vsetvl;
  out.vsetvl = f;
  return true;
}

namespace opv {

enum class Form : std::uint8_t { VV, VX, VI, VF };

inline constexpr char form_letter(Form f) {
  switch (f) {
    case Form::VV: return 'v';
    case Form::VX: return 'x';
    case Form::VI: return 'i';
    case Form::VF: return 'f';
  }
  return '?';
}

inline constexpr std::uint8_t form_bit(Form f) {
  switch (f) {
    case Form::VV: return kVV;
    case Form::VX: return kVX;
    case Form::VI: return kVI;
    case Form::VF: return kVF;
  }
  return 0;
}

}  // namespace opv

inline bool decode_opv(std::uint32_t raw, SpecVersion spec, DecodedInstr& out) {
  using opv::Form;
  const std::uint32_t funct3 = bits(raw, 14, 12);
  if (funct3 == 7) return decode_vsetvl(raw, spec, out);

  static constexpr OpGroup kGroup[7] = {OpGroup::I, OpGroup::F, OpGroup::M, OpGroup::I,
                                        OpGroup::I, OpGroup::F, OpGroup::M};
  static constexpr Form kForm[7] = {Form::VV, Form::VV, Form::VV, Form::VI,
                                    Form::VX, Form::VF, Form::VX};
  const OpGroup group = kGroup[funct3];
  const Form form = kForm[funct3];
  const std::uint32_t f6 = bits(raw, 31, 26);
  const std::uint32_t vd = bits(raw, 11, 7);
  const std::uint32_t vs1 = bits(raw, 19, 15);
  const std::uint32_t vs2 = bits(raw, 24, 20);
  const bool masked = bits(raw, 25, 25) == 0;

  const OpvEntry* e = nullptr;
  for (const auto& row : opv_table(spec)) {
    if (row.funct6 == f6 && row.group == group && (row.forms & opv::form_bit(form))) {
      e = &row;
      break;
    }
  }
  if (e == nullptr) return false;

  const auto V = [](std::uint32_t n) { return RegRef::v(n); };
  const auto X = [](std::uint32_t n) { return RegRef::x(n); };
  const auto F = [](std::uint32_t n) { return RegRef::f(n); };

  AsmBuilder b(out, true);
  out.type = InstrType::Vector;
  out.v_major = e->major;
  out.v_minor = e->minor;
  out.masked = false;

  const char L = opv::form_letter(form);
  const auto third = [&](bool unsigned_imm) {
    switch (form) {
      case Form::VV: b.src(V(vs1)); break;
      case Form::VX: b.src(X(vs1)); break;
      case Form::VF: b.src(F(vs1)); break;
      case Form::VI: b.imm(unsigned_imm ? vs1 : sext(vs1, 5)); break;
    }
  };
  const auto mask_operand = [&] {
    if (masked) {
      out.masked = true;
      b.raw("v0.t");
    }
  };
  const auto name = [&](std::string_view base, std::string_view suffix) {
    b.mnemonic(base);
    b.mnemonic_suffix(suffix);
  };
  const auto with_carry = [&](std::string_view base) {
    name(base, std::string{'.', 'v', L, 'm'});
    b.dst(V(vd));
    b.src(V(vs2));
    third(false);
    b.src(V(0));
  };

  switch (e->shape) {
    case Shape::Binary:
    case Shape::BinaryUimm:
      name(e->name, std::string{'.', 'v', L});
      b.dst(V(vd));
      b.src(V(vs2));
      third(e->shape == Shape::BinaryUimm);
      mask_operand();
      return true;
    case Shape::Narrow:
    case Shape::WideW:
      name(e->name, std::string{'.', 'w', L});
      b.dst(V(vd));
      b.src(V(vs2));
      third(true);
      mask_operand();
      return true;
    case Shape::Reduction:
      name(e->name, ".vs");
      b.dst(V(vd));
      b.src(V(vs2));
      b.src(V(vs1));
      mask_operand();
      return true;
    case Shape::MulAdd:
      name(e->name, std::string{'.', 'v', L});
      b.dst(V(vd));
      third(false);
      b.src(V(vs2));
      b.implicit_src(V(vd));
      mask_operand();
      return true;
    case Shape::CarryIn:
      if (!masked) return false;
      with_carry(e->name);
      return true;
    case Shape::CarryOut:
      if (masked) {
        with_carry(e->name);
        return true;
      }
      if (spec != SpecVersion::V1_0) return false;
      name(e->name, std::string{'.', 'v', L});
      b.dst(V(vd));
      b.src(V(vs2));
      third(false);
      return true;
    case Shape::Merge:
      if (masked) {
        with_carry("vmerge");
        return true;
      }
      if (vs2 != 0) return false;
      name("vmv.v.", std::string{L});
      b.dst(V(vd));
      third(false);
      return true;
    case Shape::FMerge:
      if (masked) {
        with_carry("vfmerge");
        return true;
      }
      if (vs2 != 0) return false;
      name("vfmv.v.f", "");
      b.dst(V(vd));
      b.src(F(vs1));
      return true;
    case Shape::MaskLogical:
      if (masked) return false;
      name(e->name, ".mm");
      b.dst(V(vd));
      b.src(V(vs2));
      b.src(V(vs1));
      return true;
    case Shape::Compress:
      if (masked) return false;
      name(e->name, ".vm");
      b.dst(V(vd));
      b.src(V(vs2));
      b.src(V(vs1));
      return true;
    case Shape::WholeMove: {
      if (masked) return false;
      if (vs1 != 0 && vs1 != 1 && vs1 != 3 && vs1 != 7) return false;
      b.mnemonic("vmv" + std::to_string(vs1 + 1) + "r.v");
      b.dst(V(vd));
      b.src(V(vs2));
      return true;
    }
    case Shape::ExtXV:
      if (masked) return false;
      name(e->name, "");
      b.dst(X(vd));
      b.src(V(vs2));
      b.src(X(vs1));
      return true;
    case Shape::UnaryVs1:
    case Shape::UnaryVs2: {
      const std::uint32_t sel = e->shape == Shape::UnaryVs1 ? vs1 : vs2;
      const UnaryEntry* u = nullptr;
      for (const auto& row : unary_table(e->unary)) {
        if (row.selector == sel) {
          u = &row;
          break;
        }
      }
      if (u == nullptr) return false;
      if (masked && !u->maskable) return false;
      out.v_major = u->major;
      out.v_minor = u->minor;
      b.mnemonic(u->name);
      switch (u->form) {
        case UnaryForm::XfromV: b.dst(X(vd)); b.src(V(vs2)); break;
        case UnaryForm::FfromV: b.dst(F(vd)); b.src(V(vs2)); break;
        case UnaryForm::VfromV: b.dst(V(vd)); b.src(V(vs2)); break;
        case UnaryForm::VOnly:
          if (vs2 != 0) return false;
          b.dst(V(vd));
          break;
        case UnaryForm::VfromX: b.dst(V(vd)); b.src(X(vs1)); break;
        case UnaryForm::VfromF: b.dst(V(vd)); b.src(F(vs1)); break;
      }
      mask_operand();
      return true;
    }
  }
  return false;
}

// Vector loads and stores. Returns false for reserved encodings; the caller
// has already checked that the width field selects a vector access.
inline bool decode_vmem(std::uint32_t raw, SpecVersion spec, DecodedInstr& out) {
  const bool store = bits(raw, 6, 0) == kOpStoreFp;
  const std::uint32_t nf = bits(raw, 31, 29);
  const bool masked = bits(raw, 25, 25) == 0;
  const std::uint32_t lumop = bits(raw, 24, 20);
  const std::uint32_t rs1 = bits(raw, 19, 15);
  const std::uint32_t width = bits(raw, 14, 12);
  const std::uint32_t vd = bits(raw, 11, 7);
  const std::string seg = nf ? "seg" + std::to_string(nf + 1) : std::string{};

  std::string name;
  VMinor minor = VMinor::Unit;
  enum class Third : std::uint8_t { None, Stride, Index } third = Third::None;

  if (spec == SpecVersion::V1_0) {
    if (bits(raw, 28, 28)) return false;  // mew
    const std::uint32_t mop = bits(raw, 27, 26);
    const unsigned eew = width == 0 ? 8 : (8u << (width - 4));
    const std::string e = std::to_string(eew);
    const char* ls = store ? "vs" : "vl";
    switch (mop) {
      case 0b00:
        if (lumop == 0) {
          name = std::string(ls) + seg + "e" + e + ".v";
        } else if (lumop == 16 && !store) {
          name = "vl" + seg + "e" + e + "ff.v";
        } else if (lumop == 8) {
          if (masked || (nf != 0 && nf != 1 && nf != 3 && nf != 7)) return false;
          if (store) {
            if (eew != 8) return false;
            name = "vs" + std::to_string(nf + 1) + "r.v";
          } else {
            name = "vl" + std::to_string(nf + 1) + "re" + e + ".v";
          }
        } else if (lumop == 11) {
          if (masked || nf != 0 || eew != 8) return false;
          name = store ? "vsm.v" : "vlm.v";
        } else {
          return false;
        }
        break;
      case 0b10:
        name = std::string(ls) + "s" + seg + "e" + e + ".v";
        minor = VMinor::Stride;
        third = Third::Stride;
        break;
      default:
        name = std::string(ls) + (mop == 0b01 ? "ux" : "ox") + (nf ? seg : "") + "ei" + e + ".v";
        minor = VMinor::Index;
        third = Third::Index;
        break;
    }
  } else {
    const std::uint32_t mop = bits(raw, 28, 26);
    static constexpr std::string_view kSz[8] = {"b", "", "", "", "", "h", "w", "e"};
    const std::string sz(kSz[width]);
    const bool sized = width != 7;
    if (!store) {
      const bool sign = mop & 0b100;
      const std::uint32_t kind = mop & 0b011;
      if (sign && !sized) return false;
      const std::string s = sign || !sized ? sz : sz + "u";
      switch (kind) {
        case 0b00:
          if (lumop == 0) name = "vl" + seg + s + ".v";
          else if (lumop == 16) name = "vl" + seg + s + "ff.v";
          else return false;
          break;
        case 0b10:
          name = "vls" + seg + s + ".v";
          minor = VMinor::Stride;
          third = Third::Stride;
          break;
        case 0b11:
          name = "vlx" + seg + s + ".v";
          minor = VMinor::Index;
          third = Third::Index;
          break;
        default:
          return false;
      }
    } else {
      switch (mop) {
        case 0b000:
          if (lumop != 0) return false;
          name = "vs" + seg + sz + ".v";
          break;
        case 0b010:
          name = "vss" + seg + sz + ".v";
          minor = VMinor::Stride;
          third = Third::Stride;
          break;
        case 0b011:
          name = "vsx" + seg + sz + ".v";
          minor = VMinor::Index;
          third = Third::Index;
          break;
        case 0b111:
          if (nf != 0) return false;
          name = "vsux" + sz + ".v";
          minor = VMinor::Index;
          third = Third::Index;
          break;
        default:
          return false;
      }
    }
  }

  AsmBuilder b(out, true);
  out.type = InstrType::Vector;
  out.v_major = VMajor::Memory;
  out.v_minor = minor;
  b.mnemonic(name);
  if (store) b.src(RegRef::v(vd));
  else b.dst(RegRef::v(vd));
  b.mem_src(RegRef::x(rs1), 0, false);
  if (third == Third::Stride) b.src(RegRef::x(lumop));
  if (third == Third::Index) b.src(RegRef::v(lumop));
  out.masked = masked;
  if (masked) b.raw("v0.t");
  return true;
}

}  // namespace rave::detail
