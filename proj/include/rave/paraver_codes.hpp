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

// Frozen mnemonic -> Paraver instruction-class code tables. The .inc files
// are produced by tools/gen_paraver_codes and checked in; codes start at 10
// in lexicographic mnemonic order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>

#include "rave/isa.hpp"

namespace rave {

struct MnemonicCode {
  std::string_view mnemonic;
  std::uint32_t code;
};

inline constexpr std::uint32_t kFirstMnemonicCode = 10;

namespace detail {
inline constexpr MnemonicCode kParaverCodesV0_7_1[] = {
#include "rave/detail/paraver_codes_v0_7_1.inc"
};
inline constexpr MnemonicCode kParaverCodesV1_0[] = {
#include "rave/detail/paraver_codes_v1_0.inc"
};
}  // namespace detail

inline constexpr std::span<const MnemonicCode> paraver_code_table(SpecVersion spec) {
  if (spec == SpecVersion::V1_0) return detail::kParaverCodesV1_0;
  return detail::kParaverCodesV0_7_1;
}

// Code for `mnemonic`, or 0 when it is not in the table.
inline std::uint32_t paraver_code(std::string_view mnemonic, SpecVersion spec) {
  const auto table = paraver_code_table(spec);
  const auto it = std::lower_bound(
      table.begin(), table.end(), mnemonic,
      [](const MnemonicCode& e, std::string_view m) { return e.mnemonic < m; });
  return (it != table.end() && it->mnemonic == mnemonic) ? it->code : 0;
}

}  // namespace rave
