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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "rave/rave.hpp"
#include "support.hpp"

namespace rave {
namespace {

namespace fs = std::filesystem;
using test::StreamBuilder;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rave_analyzer_test";
  fs::create_directories(dir);
  return dir / name;
}

// Named event with two values, some vector work in each.
StreamBuilder two_region_program() {
  StreamBuilder b;
  b.name_event(1000, "Code Region")
      .name_value(1000, 1, "Ini")
      .name_value(1000, 2, "Compute")
      .event(1000, 1)
      .scalar(3)
      .vsetvli(1'000'000'000, 64)
      .event(1000, 2)
      .vadd(4)
      .scalar(2)
      .event(1000, 0);
  return b;
}

TEST(Analyzer, TwoRegionProgram) {
  Analyzer a({});
  test::feed(a, two_region_program().records());
  const auto& regs = a.ledger().completed();
  ASSERT_EQ(regs.size(), 2u);
  EXPECT_EQ(*a.ledger().event_name(1000), "Code Region");
  EXPECT_EQ(*a.ledger().value_name(1000, 2), "Compute");
  EXPECT_EQ(regs[0].delta->scalar_instr, 3u);
  EXPECT_EQ(regs[0].delta->vsetvl_instr, 1u);
  EXPECT_EQ(regs[1].delta->vector_instr[3], 4u);
  EXPECT_EQ(regs[1].delta->velem[3], 4u * 256);
  EXPECT_EQ(regs[1].delta->scalar_instr, 2u);
  EXPECT_EQ(a.counters().total(), 10u);
  EXPECT_EQ(a.index(), 10u);
  EXPECT_EQ(a.diagnostics().total(), 0u);

  const std::string rep = a.report();
  EXPECT_NE(rep.find("Reg. #0: Event 1000(Code Region), Value 1(Ini)\n"), std::string::npos);
  EXPECT_NE(rep.find("Reg. #1: Event 1000(Code Region), Value 2(Compute)\n"), std::string::npos);
  EXPECT_NE(rep.find("            avg_VL: 256.00 elements\n"), std::string::npos);
}

TEST(Analyzer, StartStopWithNothingBetween) {
  StreamBuilder b;
  b.stop().start().stop();
  Analyzer a({});
  test::feed(a, b.records());
  EXPECT_EQ(a.counters().total(), 0u);
  EXPECT_TRUE(a.ledger().completed().empty());
}

TEST(Analyzer, GatingSkipsCountsButKeepsVectorState) {
  StreamBuilder b;
  b.vsetvli(100, 32).scalar(5).vadd(2).start().vadd().stop().scalar(9);
  AnalyzerOptions opt;
  opt.start_disabled = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  EXPECT_EQ(a.counters().total(), 1u);
  EXPECT_EQ(a.counters().vector_instr[2], 1u);
  EXPECT_EQ(a.counters().velem[2], 100u);
}

TEST(Analyzer, EventWhileDisabledMarksRegionPartial) {
  StreamBuilder b;
  b.stop().event(7, 1).start().scalar(2).event(7, 0).event(8, 1).scalar().stop().scalar().start().event(8, 0);
  Analyzer a({});
  test::feed(a, b.records());
  const auto& regs = a.ledger().completed();
  ASSERT_EQ(regs.size(), 2u);
  EXPECT_TRUE(regs[0].partial);
  EXPECT_TRUE(regs[1].partial);
  EXPECT_EQ(regs[1].delta->scalar_instr, 1u);
  EXPECT_NE(a.report().find("Value 1 [partial]"), std::string::npos);
}

TEST(Analyzer, RestartMidRegionNeverReportsIt) {
  StreamBuilder b;
  b.vsetvli(8, 64).event(1, 1).vadd(3).restart().scalar(2).event(2, 5).scalar().event(2, 0).event(1, 0);
  Diagnostics diag;
  Analyzer a({}, &diag);
  test::feed(a, b.records());
  ASSERT_EQ(a.ledger().completed().size(), 1u);
  EXPECT_EQ(a.ledger().completed()[0].event_id, 2u);
  EXPECT_EQ(a.counters().total(), 3u);
  EXPECT_EQ(diag.count(ErrorKind::CloseWithoutOpen), 1u);
}

TEST(Analyzer, RestartImmediatelyAfterStartIsNoOp) {
  StreamBuilder with, without;
  with.start().restart();
  for (auto* b : {&with, &without}) b->vsetvli(50, 16).event(3, 1).vadd(2).scalar().event(3, 0);
  Analyzer a({}), b({});
  test::feed(a, with.records());
  test::feed(b, without.records());
  EXPECT_EQ(a.report(), b.report());
  EXPECT_EQ(a.counters(), b.counters());
}

TEST(Analyzer, VectorBeforeVsetvlIsFatalInStrictMode) {
  StreamBuilder b;
  b.scalar().vadd();
  Analyzer a({});
  try {
    test::feed(a, b.records());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VectorStateUnknown);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Analyzer, PermissiveModeWarnsAndContinues) {
  StreamBuilder b;
  b.raw(0xffffffff).vadd().event(1, 1).raw(rave_enc_or_x0(10, 11)).raw(test::enc::addi(0, 0, -5));
  AnalyzerOptions opt;
  opt.strict = false;
  Diagnostics diag;
  Analyzer a(opt, &diag);
  test::feed(a, b.records());
  EXPECT_EQ(diag.count(ErrorKind::UndecodableEncoding), 1u);
  EXPECT_EQ(diag.count(ErrorKind::VectorStateUnknown), 1u);
  EXPECT_EQ(diag.count(ErrorKind::MissingRegisterValues), 1u);
  EXPECT_EQ(diag.count(ErrorKind::UnknownMarkerImmediate), 1u);
  EXPECT_EQ(a.counters().scalar_instr, 2u);  // undecodable + addi x0,x0,-5
  EXPECT_EQ(a.counters().vector_instr[0], 1u);
}

TEST(Analyzer, UndecodableIsFatalInStrictMode) {
  StreamBuilder b;
  b.scalar().raw(0xffffffff);
  Analyzer a({});
  try {
    test::feed(a, b.records());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndecodableEncoding);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Analyzer, DecodeCacheIsKeyedByPcAndEncoding) {
  Analyzer a({});
  const auto v = test::enc::addi(5, 5, 1);
  for (int i = 0; i < 1000; ++i) a.process({0x100 + 4 * static_cast<std::uint64_t>(i % 10), v, {}, {}});
  a.process({0x100, test::enc::addi(6, 6, 1), {}, {}});
  EXPECT_EQ(a.decode_cache_size(), 11u);
  EXPECT_EQ(a.counters().scalar_instr, 1001u);
}

TEST(Analyzer, RejectsBadVlen) {
  AnalyzerOptions opt;
  opt.vlen_bits = 96;
  EXPECT_THROW(Analyzer a(opt), Error);
}

TEST(Analyzer, StreamFromFile) {
  const auto p = scratch("regions.trace");
  { std::ofstream(p) << two_region_program().text(); }
  Analyzer a({});
  analyze_stream(a, p.string());
  EXPECT_EQ(a.ledger().completed().size(), 2u);
  EXPECT_EQ(a.records(), two_region_program().records().size());
}

// ---- Paraver ---------------------------------------------------------------

TEST(Paraver, ScalarAtIndexSeven) {
  StreamBuilder b;
  b.scalar(8);
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  const auto pre = scratch("scalar");
  a.write_paraver(pre.string());
  const auto prv = slurp(pre.string() + ".prv");
  EXPECT_NE(prv.find("\n2:1:1:1:1:7:90000001:1\n"), std::string::npos);
  EXPECT_EQ(prv.substr(0, prv.find('\n')), "#Paraver (01/01/70 at 00:00):7_ns:1(1):1:1(1:1)");
}

TEST(Paraver, VectorAndUserEvents) {
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  test::feed(a, two_region_program().records());
  const auto pre = scratch("regions");
  a.write_paraver(pre.string());
  const auto prv = slurp(pre.string() + ".prv");
  const auto vadd = paraver_code("vadd.vv", SpecVersion::V1_0);
  ASSERT_NE(vadd, 0u);
  EXPECT_NE(prv.find("2:1:1:1:1:4:90000001:" + std::to_string(vadd) +
                     ":90000002:256:90000003:64:90000004:2\n"),
            std::string::npos);
  EXPECT_NE(prv.find("2:1:1:1:1:0:1000:1\n"), std::string::npos);
  EXPECT_NE(prv.find("2:1:1:1:1:4:1000:2\n"), std::string::npos);
  EXPECT_NE(prv.find("2:1:1:1:1:10:1000:0\n"), std::string::npos);
  const auto pcf = slurp(pre.string() + ".pcf");
  EXPECT_NE(pcf.find("0    1000    Code Region\nVALUES\n0      End\n1      Ini\n2      Compute\n"),
            std::string::npos);
  EXPECT_EQ(slurp(pre.string() + ".row"), ParaverWriter::row());
}

TEST(Paraver, SplitEvents) {
  StreamBuilder b;
  b.vsetvli(3, 8).vadd();
  AnalyzerOptions opt;
  opt.paraver = true;
  opt.split_events = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  const auto pre = scratch("split");
  a.write_paraver(pre.string());
  const auto prv = slurp(pre.string() + ".prv");
  EXPECT_NE(prv.find("2:1:1:1:1:1:90000002:3\n2:1:1:1:1:1:90000003:8\n2:1:1:1:1:1:90000004:2\n"),
            std::string::npos);
}

TEST(Paraver, EmptyStreamIsHeaderOnly) {
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  test::feed(a, {});
  const auto pre = scratch("empty");
  a.write_paraver(pre.string());
  EXPECT_EQ(slurp(pre.string() + ".prv"), "#Paraver (01/01/70 at 00:00):0_ns:1(1):1:1(1:1)\n");
}

TEST(Paraver, UnnamedEventGetsNumericEntries) {
  StreamBuilder b;
  b.event(4242, 9).scalar().event(4242, 0);
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  const auto pre = scratch("unnamed");
  a.write_paraver(pre.string());
  EXPECT_NE(slurp(pre.string() + ".pcf").find("0    4242    Event 4242\nVALUES\n0      End\n9      9\n"),
            std::string::npos);
}

TEST(Paraver, TwoEventsSameIndexKeepOrder) {
  StreamBuilder b;
  b.event(1, 1).event(2, 1).scalar();
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  const auto pre = scratch("order");
  a.write_paraver(pre.string());
  EXPECT_NE(slurp(pre.string() + ".prv").find("2:1:1:1:1:0:1:1\n2:1:1:1:1:0:2:1\n2:1:1:1:1:0:90000001:1\n"),
            std::string::npos);
}

TEST(Paraver, RestartTruncatesBody) {
  StreamBuilder with, without;
  with.scalar(5).event(1, 3).restart();
  for (auto* b : {&with, &without}) b->vsetvli(10, 64).event(2, 1).vadd(2).event(2, 0);
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt), b(opt);
  test::feed(a, with.records());
  test::feed(b, without.records());
  const auto pa = scratch("restart_a"), pb = scratch("restart_b");
  a.write_paraver(pa.string());
  b.write_paraver(pb.string());
  EXPECT_EQ(slurp(pa.string() + ".prv"), slurp(pb.string() + ".prv"));
  EXPECT_EQ(slurp(pa.string() + ".pcf"), slurp(pb.string() + ".pcf"));
}

TEST(Paraver, UnwritablePrefixReportsPath) {
  AnalyzerOptions opt;
  opt.paraver = true;
  Analyzer a(opt);
  try {
    a.write_paraver("/nonexistent-dir/x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.prv"), std::string::npos);
  }
}

// ---- Instruction log -------------------------------------------------------

TEST(InstructionLog, ListsVectorInstructions) {
  StreamBuilder b;
  b.vsetvli(7, 32, 1).scalar().vadd();
  AnalyzerOptions opt;
  opt.instruction_log = true;
  Analyzer a(opt);
  test::feed(a, b.records());
  const auto p = scratch("log.tsv");
  a.write_log(p.string());
  EXPECT_EQ(slurp(p), std::string(kLogHeader) + "2\t0x10008\tvadd.vv v1, v2, v3\t7\t32\tm2\tv1\tv2\tv3\t-\n");
}

// ---- Report ----------------------------------------------------------------

MetricCounters bu_region() {
  MetricCounters c;
  c.scalar_instr = 15818;
  c.vsetvl_instr = 5236;
  c.vector_instr[3] = 17818;
  c.vint_instr[3] = 2466;
  c.vunit_instr[3] = 1573;
  c.vidx_instr[3] = 1569;
  c.vmask_instr[3] = 8171;
  c.velem[3] = 4554281;
  return c;
}

TEST(Report, BuRegionBlock) {
  const std::string expected =
      "    tot_instr: 38872\n"
      "        scalar_instr: 15818 (40.69%)\n"
      "        vsetvl_instr: 5236 (13.47%)\n"
      "        SEW 64 vector_instr: 17818 (45.84%)\n"
      "            avg_VL: 255.60 elements\n"
      "            Arith: 2466 (13.84%)\n"
      "                FP: 0 (0.00%)\n"
      "                INT: 2466 (100.00%)\n"
      "            Mem: 3142 (17.63%)\n"
      "                unit: 1573 (50.06%)\n"
      "                strided: 0 (0.00%)\n"
      "                indexed: 1569 (49.94%)\n"
      "            Mask: 8171 (45.86%)\n"
      "            Other: 4039 (22.67%)\n";
  EXPECT_EQ(render_counters(bu_region()), expected);
}

TEST(Report, HeaderNumberingAndNames) {
  RegionLedger l;
  l.name_event(1000, "code_region");
  l.name_value(1000, 3, "BU");
  l.on_user_event({1000, 3, 0}, {});
  l.on_user_event({1000, 0, 0}, bu_region());
  ReportOptions opt;
  opt.region_index_base = 3;
  const auto rep = render_report(l, bu_region(), opt);
  EXPECT_EQ(rep.substr(0, rep.find('\n')), "Reg. #3: Event 1000(code_region), Value 3(BU)");
  EXPECT_NE(rep.find("\nWhole stream\n"), std::string::npos);
  opt.color = true;
  EXPECT_NE(render_report(l, bu_region(), opt).find("\x1b[1;36mReg. #3"), std::string::npos);
}

TEST(Report, EmptyRegion) {
  EXPECT_EQ(render_counters({}),
            "    tot_instr: 0\n"
            "        scalar_instr: 0 (n/a)\n"
            "        vsetvl_instr: 0 (n/a)\n"
            "        vector_instr: 0 (n/a)\n"
            "            avg_VL: n/a\n");
}

TEST(Report, PercentagesMatchIndependentRecomputation) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    MetricCounters c;
    c.scalar_instr = rng() % 100000;
    c.vsetvl_instr = rng() % 1000;
    const unsigned s = rng() % 4;
    c.vfp_instr[s] = rng() % 5000;
    c.vint_instr[s] = rng() % 5000;
    c.vunit_instr[s] = rng() % 5000;
    c.vmask_instr[s] = rng() % 5000;
    c.vector_instr[s] = c.vfp_instr[s] + c.vint_instr[s] + c.vunit_instr[s] + c.vmask_instr[s] + rng() % 50 + 1;
    const std::string text = render_counters(c);
    const double want = 100.0 * static_cast<double>(c.scalar_instr) / static_cast<double>(c.total());
    const auto at = text.find("scalar_instr: ");
    const auto open = text.find('(', at);
    const double got = std::stod(text.substr(open + 1));
    ASSERT_NEAR(got, want, 0.005 + 1e-9);
  }
}

TEST(Report, Deterministic) {
  Analyzer a({}), b({});
  test::feed(a, two_region_program().records());
  test::feed(b, two_region_program().records());
  EXPECT_EQ(a.report(), b.report());
}

// ---- Synthetic -------------------------------------------------------------

MetricCounters analyze_synthetic(const SyntheticConfig& c) {
  AnalyzerOptions opt;
  opt.spec = c.spec;
  Analyzer a(opt);
  generate_synthetic(c, [&](const TraceRecord& r) { a.process(r); });
  a.finish();
  return a.counters();
}

TEST(Synthetic, ZeroRatio) {
  SyntheticConfig c;
  c.total = 1'000'000;
  c.vec_per_million = 0;
  const auto m = analyze_synthetic(c);
  EXPECT_EQ(m.vector_total(), 0u);
  EXPECT_EQ(m.total(), 1'000'001u);
  EXPECT_DOUBLE_EQ(*derived_metrics(m).vector_mix, 0.0);
}

TEST(Synthetic, AllVector) {
  SyntheticConfig c;
  c.total = 1'000'000;
  c.vec_per_million = 1'000'000;
  const auto m = analyze_synthetic(c);
  EXPECT_EQ(m.vector_total(), 1'000'000u);
  EXPECT_EQ(m.vsetvl_instr, 1u);
  EXPECT_EQ(m.scalar_instr, 0u);
}

TEST(Synthetic, ExactCountAllSewsBothSpecs) {
  std::mt19937_64 rng(5);
  for (auto spec : {SpecVersion::V1_0, SpecVersion::V0_7_1}) {
    for (unsigned sew : {8u, 16u, 32u, 64u}) {
      SyntheticConfig c;
      c.spec = spec;
      c.sew = sew;
      c.total = 1 + rng() % 20000;
      c.vec_per_million = rng() % 1'000'001;
      c.avl = rng() % 5000;
      c.seed = rng();
      const auto m = analyze_synthetic(c);
      ASSERT_EQ(m.vector_instr[sew_bucket(sew)], synthetic_vector_count(c.total, c.vec_per_million));
      ASSERT_EQ(m.total(), c.total + 1);
      const std::uint64_t vl = std::min<std::uint64_t>(c.avl, kDefaultVlen / sew);
      ASSERT_EQ(m.velem[sew_bucket(sew)], vl * m.vector_instr[sew_bucket(sew)]);
    }
  }
}

TEST(Synthetic, RoundingOfVectorCount) {
  EXPECT_EQ(synthetic_vector_count(1, 500'000), 1u);
  EXPECT_EQ(synthetic_vector_count(1, 499'999), 0u);
  EXPECT_EQ(synthetic_vector_count(3, 500'000), 2u);
  EXPECT_EQ(synthetic_vector_count(100'000'000, 10), 1000u);
}

TEST(Synthetic, DeterministicUnderSeed) {
  SyntheticConfig c;
  c.total = 5000;
  c.vec_per_million = 123456;
  std::string a, b;
  generate_synthetic(c, [&](const TraceRecord& r) { a += format_record(r) + "\n"; });
  generate_synthetic(c, [&](const TraceRecord& r) { b += format_record(r) + "\n"; });
  EXPECT_EQ(a, b);
  c.seed = 2;
  std::string d;
  generate_synthetic(c, [&](const TraceRecord& r) { d += format_record(r) + "\n"; });
  EXPECT_NE(a, d);
}

TEST(Synthetic, InvalidRatio) {
  SyntheticConfig c;
  c.vec_per_million = 1'000'001;
  try {
    generate_synthetic(c, [](const TraceRecord&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidRatio);
  }
}

}  // namespace
}  // namespace rave
