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

#include <map>
#include <random>
#include <vector>

#include "rave/decode.hpp"
#include "rave/instrument.h"
#include "rave/metrics.hpp"
#include "support.hpp"

namespace rave {
namespace {

namespace enc = test::enc;

VectorState sew64_state(std::uint64_t vl) {
  VectorState s;
  s.vtype = parse_vtype(enc::vtype_v1(64, 0), SpecVersion::V1_0);
  s.vl = vl;
  s.last_sew = 64;
  return s;
}

DecodedInstr d(std::uint32_t raw) { return decode(raw, 0, SpecVersion::V1_0); }

TEST(CountInstruction, VaddAtSew64) {
  MetricCounters c;
  count_instruction(c, d(enc::vadd_vv(1, 2, 3)), sew64_state(256));
  EXPECT_EQ(c.vector_instr[3], 1u);
  EXPECT_EQ(c.vint_instr[3], 1u);
  EXPECT_EQ(c.velem[3], 256u);
  EXPECT_EQ(c.total(), 1u);
}

TEST(CountInstruction, ClassesLandInTheirCounters) {
  MetricCounters c;
  const auto st = sew64_state(10);
  count_instruction(c, d(enc::vle64(1, 10)), st);
  count_instruction(c, d(enc::vlse64(1, 10, 11)), st);
  count_instruction(c, d(enc::vloxei64(1, 10, 2)), st);
  count_instruction(c, d(enc::vfmul_vv(1, 2, 3)), st);
  count_instruction(c, d(enc::vmand_mm(1, 2, 3)), st);
  count_instruction(c, d(enc::vslidedown_vx(1, 2, 10)), st);
  count_instruction(c, d(enc::addi(10, 10, 1)), st);
  count_instruction(c, d(enc::vsetvli(10, 11, enc::vtype_v1(64, 0))), st);
  count_instruction(c, d(rave_enc_start_trace()), st);
  EXPECT_EQ(c.vunit_instr[3], 1u);
  EXPECT_EQ(c.vstride_instr[3], 1u);
  EXPECT_EQ(c.vidx_instr[3], 1u);
  EXPECT_EQ(c.vfp_instr[3], 1u);
  EXPECT_EQ(c.vmask_instr[3], 1u);
  EXPECT_EQ(c.other(3), 1u);
  EXPECT_EQ(c.scalar_instr, 1u);
  EXPECT_EQ(c.vsetvl_instr, 1u);
  EXPECT_EQ(c.vector_total(), 6u);
  EXPECT_EQ(c.velem[3], 60u);
}

TEST(CountInstruction, VillIsFatalInStrictMode) {
  MetricCounters c;
  try {
    count_instruction(c, d(enc::vadd_vv(1, 2, 3)), VectorState{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VectorStateUnknown);
  }
  Diagnostics diag;
  VectorState s = sew64_state(5);
  s.vtype = VType{};  // vill, last SEW 64
  count_instruction(c, d(enc::vadd_vv(1, 2, 3)), s, false, &diag);
  EXPECT_EQ(c.vector_instr[3], 1u);
  EXPECT_EQ(diag.count(ErrorKind::VectorStateUnknown), 1u);
}

TEST(RegionLedger, CloseAndReopen) {
  RegionLedger l;
  MetricCounters c;
  l.on_user_event({1000, 1, 0}, c);
  c.scalar_instr = 5;
  l.on_user_event({1000, 2, 5}, c);
  c.scalar_instr = 12;
  l.on_user_event({1000, 0, 12}, c);
  ASSERT_EQ(l.completed().size(), 2u);
  EXPECT_EQ(l.completed()[0].open_value, 1u);
  EXPECT_EQ(l.completed()[0].close_value, 2u);
  EXPECT_EQ(l.completed()[0].delta->scalar_instr, 5u);
  EXPECT_EQ(l.completed()[1].open_value, 2u);
  EXPECT_EQ(l.completed()[1].close_value, 0u);
  EXPECT_EQ(l.completed()[1].delta->scalar_instr, 7u);
  EXPECT_TRUE(l.open_regions().empty());
}

TEST(RegionLedger, CloseWithoutOpenWarns) {
  RegionLedger l;
  Diagnostics diag;
  l.on_user_event({1000, 0, 0}, {}, true, &diag);
  EXPECT_TRUE(l.completed().empty());
  EXPECT_EQ(diag.count(ErrorKind::CloseWithoutOpen), 1u);
}

TEST(RegionLedger, ResetKeepsNames) {
  RegionLedger l;
  l.name_event(1000, "code_region");
  l.name_value(1000, 3, "BU");
  l.on_user_event({1000, 3, 0}, {});
  l.on_user_event({1000, 0, 1}, {});
  l.on_user_event({1000, 4, 1}, {});
  l.reset();
  EXPECT_TRUE(l.completed().empty());
  EXPECT_TRUE(l.open_regions().empty());
  EXPECT_EQ(*l.event_name(1000), "code_region");
  EXPECT_EQ(*l.value_name(1000, 3), "BU");
  EXPECT_EQ(l.value_name(1000, 4), nullptr);
}

TEST(RegionLedger, PartialFlag) {
  RegionLedger l;
  l.on_user_event({1, 1, 0}, {});
  l.mark_open_partial();
  l.on_user_event({1, 0, 3}, {});
  l.on_user_event({2, 1, 3}, {}, false);
  l.on_user_event({2, 0, 3}, {});
  l.on_user_event({3, 1, 3}, {});
  l.on_user_event({3, 0, 3}, {});
  ASSERT_EQ(l.completed().size(), 3u);
  EXPECT_TRUE(l.completed()[0].partial);
  EXPECT_TRUE(l.completed()[1].partial);
  EXPECT_FALSE(l.completed()[2].partial);
}

// Brute-force model: each region's delta is recomputed by rescanning the
// instruction list between its open and close positions.
struct Step {
  bool is_event;
  UserEvent ev;
  int kind;  // 0 scalar, 1 vsetvl, 2..5 vector in bucket kind-2
};

TEST(RegionLedger, InterleavedEventsMatchBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Step> steps;
    std::uint64_t idx = 0;
    const int n = 1 + rng() % 80;
    for (int i = 0; i < n; ++i) {
      if (rng() % 3 == 0) {
        const std::uint64_t e = (rng() & 1) ? 1000 : 2000;
        steps.push_back({true, {e, rng() % 4, idx}, 0});
      } else {
        steps.push_back({false, {}, static_cast<int>(rng() % 6)});
        ++idx;
      }
    }

    RegionLedger ledger;
    MetricCounters c;
    for (const auto& s : steps) {
      if (s.is_event) {
        ledger.on_user_event(s.ev, c);
      } else if (s.kind == 0) {
        ++c.scalar_instr;
      } else if (s.kind == 1) {
        ++c.vsetvl_instr;
      } else {
        ++c.vector_instr[s.kind - 2];
      }
    }

    struct Expected {
      std::uint64_t e, open_v, close_v, open_i, close_i, scalar, vsetvl, vec[4];
    };
    std::vector<Expected> expected;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::size_t>> open;  // e -> (value, step)
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (!steps[i].is_event) continue;
      const auto& ev = steps[i].ev;
      auto it = open.find(ev.event_id);
      if (it != open.end()) {
        Expected x{ev.event_id, it->second.first, ev.value_id, steps[it->second.second].ev.instr_index,
                   ev.instr_index, 0, 0, {0, 0, 0, 0}};
        for (std::size_t j = it->second.second + 1; j < i; ++j) {
          if (steps[j].is_event) continue;
          if (steps[j].kind == 0) ++x.scalar;
          else if (steps[j].kind == 1) ++x.vsetvl;
          else ++x.vec[steps[j].kind - 2];
        }
        expected.push_back(x);
        open.erase(it);
      }
      if (ev.value_id != 0) open[ev.event_id] = {ev.value_id, i};
    }

    ASSERT_EQ(ledger.completed().size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto& r = ledger.completed()[k];
      const auto& x = expected[k];
      ASSERT_EQ(r.event_id, x.e);
      ASSERT_EQ(r.open_value, x.open_v);
      ASSERT_EQ(*r.close_value, x.close_v);
      ASSERT_EQ(r.open_index, x.open_i);
      ASSERT_EQ(*r.close_index, x.close_i);
      ASSERT_EQ(r.delta->scalar_instr, x.scalar);
      ASSERT_EQ(r.delta->vsetvl_instr, x.vsetvl);
      for (int s = 0; s < 4; ++s) ASSERT_EQ(r.delta->vector_instr[s], x.vec[s]);
    }
    ASSERT_EQ(ledger.open_regions().size(), open.size());
  }
}

// Regions of one event that tile the whole stream sum to the stream counters.
TEST(RegionLedger, PartitionSumsToWhole) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    RegionLedger ledger;
    MetricCounters c;
    std::uint64_t idx = 0;
    ledger.on_user_event({5, 1, 0}, c);
    const int n = rng() % 500;
    for (int i = 0; i < n; ++i) {
      if (rng() % 20 == 0) ledger.on_user_event({5, 1 + rng() % 9, idx}, c);
      const auto s = rng() % 4;
      switch (rng() % 5) {
        case 0: ++c.scalar_instr; break;
        case 1: ++c.vsetvl_instr; break;
        case 2: ++c.vector_instr[s]; ++c.vint_instr[s]; c.velem[s] += rng() % 300; break;
        case 3: ++c.vector_instr[s]; ++c.vidx_instr[s]; break;
        default: ++c.vector_instr[s]; break;
      }
      ++idx;
    }
    ledger.on_user_event({5, 0, idx}, c);
    MetricCounters sum;
    std::uint64_t instrs = 0;
    for (const auto& r : ledger.completed()) {
      sum += *r.delta;
      instrs += *r.close_index - r.open_index;
      ASSERT_EQ(r.delta->total(), *r.close_index - r.open_index);
    }
    ASSERT_EQ(sum, c);
    ASSERT_EQ(instrs, idx);
  }
}

TEST(Percent, HalfAwayFromZeroExact) {
  EXPECT_EQ(*percent_text(15818, 38872), "40.69");
  EXPECT_EQ(*percent_text(5236, 38872), "13.47");
  EXPECT_EQ(*percent_text(17818, 38872), "45.84");
  EXPECT_EQ(*percent_text(1, 8), "12.50");
  EXPECT_EQ(*percent_text(1, 80000), "0.00");    // 0.00125
  EXPECT_EQ(*percent_text(1, 40000), "0.00");    // 0.0025 -> 0.00
  EXPECT_EQ(*percent_text(1, 20000), "0.01");    // 0.005 rounds up
  EXPECT_EQ(*percent_text(7, 7), "100.00");
  EXPECT_FALSE(percent_text(1, 0));
  EXPECT_EQ(*ratio_text(4554281, 17818), "255.60");
}

TEST(DerivedMetrics, BuRegionCounters) {
  MetricCounters c;
  c.scalar_instr = 15818;
  c.vsetvl_instr = 5236;
  c.vector_instr[3] = 17818;
  c.vint_instr[3] = 2466;
  c.vunit_instr[3] = 1573;
  c.vidx_instr[3] = 1569;
  c.vmask_instr[3] = 8171;
  c.velem[3] = 4554281;
  const auto m = derived_metrics(c);
  EXPECT_EQ(m.total, 38872u);
  EXPECT_NEAR(*m.scalar_pct, 40.69, 0.005);
  EXPECT_NEAR(*m.vsetvl_pct, 13.47, 0.005);
  EXPECT_NEAR(*m.vector_pct, 45.84, 0.005);
  EXPECT_NEAR(*m.buckets[3].avg_vl, 255.60, 0.005);
  EXPECT_NEAR(*m.buckets[3].arith_pct, 13.84, 0.005);
  EXPECT_NEAR(*m.buckets[3].mem_pct, 17.63, 0.005);
  EXPECT_NEAR(*m.buckets[3].mask_pct, 45.86, 0.005);
  EXPECT_NEAR(*m.buckets[3].other_pct, 22.67, 0.005);
  EXPECT_EQ(c.other(3), 4039u);
  EXPECT_FALSE(m.buckets[0].avg_vl);
}

TEST(DerivedMetrics, ZeroCountersAreAbsent) {
  const auto m = derived_metrics({});
  EXPECT_FALSE(m.vector_mix);
  EXPECT_FALSE(m.scalar_pct);
  for (const auto& b : m.buckets) {
    EXPECT_FALSE(b.avg_vl);
    EXPECT_FALSE(b.arith_pct);
    EXPECT_FALSE(b.fp_pct);
  }
}

}  // namespace
}  // namespace rave
