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

// Writes the mnemonic code table for one spec version to stdout.
//   gen_paraver_codes v1.0 > include/rave/detail/paraver_codes_v1_0.inc

#include <iostream>

#include "rave/decode.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_paraver_codes {v0.7.1|v1.0}\n";
    return 2;
  }
  const auto spec = rave::parse_spec_version(argv[1]);
  if (!spec) {
    std::cerr << "unknown spec version: " << argv[1] << "\n";
    return 2;
  }
  std::cout << "// Generated by gen_paraver_codes. Do not edit.\n";
  std::uint32_t code = rave::kFirstMnemonicCode;
  for (const auto& m : rave::known_mnemonics(*spec)) {
    std::cout << "{\"" << m << "\", " << code++ << "},\n";
  }
  return 0;
}
