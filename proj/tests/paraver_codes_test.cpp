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

#include <gtest/gtest.h>

#include <ostream>
#include <set>
#include <string>

#include "rave/decode.hpp"
#include "rave/paraver.hpp"
#include "rave/paraver_codes.hpp"

namespace rave {

void PrintTo(SpecVersion s, std::ostream* os) { *os << to_string(s); }

namespace {

class CodeTable : public ::testing::TestWithParam<SpecVersion> {};

// The checked-in tables must be regenerated whenever the decoder learns a
// new mnemonic.
TEST_P(CodeTable, MatchesDecoderMnemonics) {
  const auto table = paraver_code_table(GetParam());
  const auto names = known_mnemonics(GetParam());
  ASSERT_EQ(table.size(), names.size()) << "run gen_paraver_codes to refresh the .inc files";
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(table[i].mnemonic, names[i]);
    EXPECT_EQ(table[i].code, kFirstMnemonicCode + i);
  }
}

TEST_P(CodeTable, CodesAreDistinctFromReservedValues) {
  std::set<std::uint32_t> seen;
  for (const auto& e : paraver_code_table(GetParam())) {
    EXPECT_GT(e.code, kScalarParaverCode);
    EXPECT_TRUE(seen.insert(e.code).second);
    EXPECT_EQ(paraver_code(e.mnemonic, GetParam()), e.code);
  }
  EXPECT_EQ(paraver_code("not.an.instruction", GetParam()), 0u);
}

TEST_P(CodeTable, DecodedInstructionsCarryTheirCode) {
  const auto spec = GetParam();
  const DecodedInstr v = decode(0x022080d7, 0, spec);  // vadd.vv v1, v2, v1
  EXPECT_EQ(v.paraver_code, paraver_code("vadd.vv", spec));
  const DecodedInstr s = decode(0x00160613, 0, spec);  // addi a2, a2, 1
  EXPECT_EQ(s.paraver_code, kScalarParaverCode);
  const DecodedInstr r = decode(0x00160613, 0, spec, {true});
  EXPECT_EQ(r.paraver_code, paraver_code("addi", spec));
}

INSTANTIATE_TEST_SUITE_P(Specs, CodeTable,
                         ::testing::Values(SpecVersion::V0_7_1, SpecVersion::V1_0),
                         [](const auto& info) {
                           return info.param == SpecVersion::V1_0 ? "v1_0" : "v0_7_1";
                         });

TEST(VectorClassCode, CoversEveryClass) {
  std::set<std::string> labels;
  for (int c = 1; c <= 7; ++c) labels.insert(std::string(to_string(static_cast<VectorClassCode>(c))));
  EXPECT_EQ(labels.size(), 7u);
}

}  // namespace
}  // namespace rave
