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

// Synthetic workloads with a fixed number of vector instructions per million.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rave/error.hpp"
#include "rave/isa.hpp"
#include "rave/trace_io.hpp"

namespace rave {

struct SyntheticConfig {
  std::uint64_t total = 1'000'000;          // instructions after the leading vsetvli
  std::uint64_t vec_per_million = 0;
  unsigned sew = 64;
  std::uint64_t avl = 256;
  std::uint64_t seed = 1;
  SpecVersion spec = SpecVersion::V1_0;
};

// round(total * r / 10^6), half away from zero, exact.
inline std::uint64_t synthetic_vector_count(std::uint64_t total, std::uint64_t vec_per_million) {
  const unsigned __int128 n = static_cast<unsigned __int128>(total) * vec_per_million;
  return static_cast<std::uint64_t>((n * 2 + 1'000'000) / 2'000'000);
}

namespace detail {

// Vector opcodes that decode under both spec versions: vadd.vv, vle64/vle,
// vse64/vse, vlse64/vlse, vloxei64/vlxe, vfmul.vv, vmand.mm, vslidedown.vx.
inline constexpr std::uint32_t kSyntheticVector[] = {
    0x022080d7, 0x02057087, 0x020570a7, 0x0ab57087,
    0x0e257087, 0x922090d7, 0x662120d7, 0x3e2540d7,
};
// addi a2,a2,1; add a3,a3,a4; slli a4,a4,3; c.addi a2,1; ld a5,0(a0)
inline constexpr std::uint32_t kSyntheticScalar[] = {
    0x00160613, 0x00e686b3, 0x00371713, 0x0605, 0x00053783,
};

inline std::uint32_t synthetic_vsetvli(SpecVersion spec, unsigned sew) {
  const unsigned vsew = sew == 8 ? 0 : sew == 16 ? 1 : sew == 32 ? 2 : 3;
  // v1.0: ta, ma, m1. 0.7.1: m1, no ediv.
  const std::uint32_t vtypei = spec == SpecVersion::V1_0 ? (0xc0u | (vsew << 3)) : (vsew << 2);
  return (vtypei << 20) | (11u << 15) | (7u << 12) | (10u << 7) | 0x57u;  // vsetvli a0, a1, ...
}

}  // namespace detail

inline void validate(const SyntheticConfig& c) {
  if (c.vec_per_million > 1'000'000) {
    throw Error(ErrorKind::InvalidRatio,
                "vec-per-million must be in [0, 1000000], got " + std::to_string(c.vec_per_million));
  }
  if (c.sew != 8 && c.sew != 16 && c.sew != 32 && c.sew != 64) {
    throw Error(ErrorKind::InvalidConfig, "sew must be 8, 16, 32 or 64");
  }
}

// Calls emit(const TraceRecord&) for the leading vsetvli and then `total`
// instructions, exactly synthetic_vector_count() of them vector. Vector
// positions are a uniform sample drawn sequentially, so memory use is
// constant. Deterministic for a given config.
template <typename Emit>
void generate_synthetic(const SyntheticConfig& c, Emit&& emit) {
  validate(c);
  std::mt19937_64 rng(c.seed);
  TraceRecord r;
  r.pc = 0xfffc;
  r.raw = detail::synthetic_vsetvli(c.spec, c.sew);
  r.rs1_value = c.avl;
  emit(static_cast<const TraceRecord&>(r));
  r.rs1_value.reset();

  std::uint64_t need = synthetic_vector_count(c.total, c.vec_per_million);
  constexpr auto kNv = std::size(detail::kSyntheticVector);
  constexpr auto kNs = std::size(detail::kSyntheticScalar);
  for (std::uint64_t i = 0; i < c.total; ++i) {
    const std::uint64_t remaining = c.total - i;
    const std::uint64_t draw = rng();
    const bool vector = need == remaining || (need != 0 && draw % remaining < need);
    r.pc = 0x10000 + 4 * (i % 1024);
    if (vector) {
      r.raw = detail::kSyntheticVector[(draw >> 40) % kNv];
      --need;
    } else {
      r.raw = detail::kSyntheticScalar[(draw >> 40) % kNs];
    }
    emit(static_cast<const TraceRecord&>(r));
  }
}

// Writes a complete rave-wire stream to `out`.
inline void write_synthetic(const SyntheticConfig& c, std::FILE* out) {
  validate(c);
  TraceWriter w(out);
  generate_synthetic(c, [&](const TraceRecord& r) { w.write(r); });
}

}  // namespace rave
