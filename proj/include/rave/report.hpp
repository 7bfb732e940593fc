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

// Console vectorization report.
//
//   Reg. #3: Event 1000(code_region), Value 3(BU)
//       tot_instr: 38872
//           scalar_instr: 15818 (40.69%)
//           vsetvl_instr: 5236 (13.47%)
//           SEW 64 vector_instr: 17818 (45.84%)
//               avg_VL: 255.60 elements
//               Arith: 2466 (13.84%)
//                   FP: 0 (0.00%)
//                   ...

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rave/metrics.hpp"

namespace rave {

struct ReportOptions {
  std::uint64_t region_index_base = 0;
  bool color = false;
};

namespace detail {

inline void report_line(std::string& out, int depth, std::string_view label, std::uint64_t n,
                        std::uint64_t den) {
  out.append(4 * depth, ' ');
  out += label;
  out += ": ";
  out += std::to_string(n);
  const auto pct = percent_text(n, den);
  out += pct ? " (" + *pct + "%)" : std::string(" (n/a)");
  out += '\n';
}

inline std::string header_text(const std::string& text, bool color) {
  return color ? "\x1b[1;36m" + text + "\x1b[0m" : text;
}

}  // namespace detail

// Counter block without a header, starting at one indent level.
inline std::string render_counters(const MetricCounters& c) {
  using detail::report_line;
  std::string out;
  const std::uint64_t tot = c.total();
  out += "    tot_instr: " + std::to_string(tot) + "\n";
  report_line(out, 2, "scalar_instr", c.scalar_instr, tot);
  report_line(out, 2, "vsetvl_instr", c.vsetvl_instr, tot);
  bool any = false;
  for (unsigned s = 0; s < kSewBuckets; ++s) {
    const std::uint64_t v = c.vector_instr[s];
    if (v == 0) continue;
    any = true;
    report_line(out, 2, "SEW " + std::to_string(8u << s) + " vector_instr", v, tot);
    const auto avg = ratio_text(c.velem[s], v);
    out += "            avg_VL: " + (avg ? *avg + " elements" : std::string("n/a")) + "\n";
    report_line(out, 3, "Arith", c.arith(s), v);
    report_line(out, 4, "FP", c.vfp_instr[s], c.arith(s));
    report_line(out, 4, "INT", c.vint_instr[s], c.arith(s));
    report_line(out, 3, "Mem", c.mem(s), v);
    report_line(out, 4, "unit", c.vunit_instr[s], c.mem(s));
    report_line(out, 4, "strided", c.vstride_instr[s], c.mem(s));
    report_line(out, 4, "indexed", c.vidx_instr[s], c.mem(s));
    report_line(out, 3, "Mask", c.vmask_instr[s], v);
    report_line(out, 3, "Other", c.other(s), v);
  }
  if (!any) {
    report_line(out, 2, "vector_instr", 0, tot);
    out += "            avg_VL: n/a\n";
  }
  return out;
}

inline std::string region_header(const RegionLedger& names, const Region& r, std::uint64_t number) {
  std::string h = "Reg. #" + std::to_string(number) + ": Event " + std::to_string(r.event_id);
  if (const auto* en = names.event_name(r.event_id)) h += "(" + *en + ")";
  h += ", Value " + std::to_string(r.open_value);
  if (const auto* vn = names.value_name(r.event_id, r.open_value)) h += "(" + *vn + ")";
  if (r.partial) h += " [partial]";
  return h;
}

// Completed regions in completion order, then the whole-stream block.
inline std::string render_report(const RegionLedger& ledger, const MetricCounters& whole,
                                 const ReportOptions& opt = {}) {
  std::string out;
  std::uint64_t n = opt.region_index_base;
  for (const Region& r : ledger.completed()) {
    out += detail::header_text(region_header(ledger, r, n++), opt.color) + "\n";
    out += render_counters(*r.delta);
    out += "\n";
  }
  out += detail::header_text("Whole stream", opt.color) + "\n";
  out += render_counters(whole);
  return out;
}

}  // namespace rave
