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

// rave-wire v1: one executed instruction per line.
//
//   # rave-wire v1
//   I <pc-hex> <raw-hex> [<rs1-hex|-> <rs2-hex|->]
//
// Lines starting with '#' are comments. Register fields appear together or
// not at all; '-' marks an unknown value.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "rave/bounded_queue.hpp"
#include "rave/error.hpp"

namespace rave {

inline constexpr std::string_view kWireHeader = "# rave-wire v1";
inline constexpr std::string_view kWireTag = "# rave-wire ";

struct TraceRecord {
  std::uint64_t pc = 0;
  std::uint32_t raw = 0;
  std::optional<std::uint64_t> rs1_value;
  std::optional<std::uint64_t> rs2_value;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline bool parse_hex(std::string_view s, std::uint64_t& out, unsigned max_digits) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > max_digits) return false;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out, 16);
  return ec == std::errc{} && p == s.data() + s.size();
}

inline char* write_hex(char* p, std::uint64_t v, int min_digits) {
  char tmp[16];
  auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v, 16);
  for (int pad = min_digits - static_cast<int>(end - tmp); pad > 0; --pad) *p++ = '0';
  for (char* q = tmp; q != end; ++q) *p++ = *q;
  return p;
}

}  // namespace detail

// Parses one line. Returns nullopt for blank and comment lines. Throws
// Error(MalformedLine) for anything else that is not a valid record, and
// Error(InvalidConfig) for an unsupported wire version header.
inline std::optional<TraceRecord> parse_line(std::string_view line,
                                             std::optional<std::uint64_t> line_no = std::nullopt) {
  std::size_t i = 0;
  while (i < line.size() && detail::is_space(line[i])) ++i;
  if (i == line.size()) return std::nullopt;
  if (line[i] == '#') {
    const std::string_view c = line.substr(i);
    if (c.substr(0, kWireTag.size()) == kWireTag) {
      std::string_view v = c.substr(kWireTag.size());
      while (!v.empty() && detail::is_space(v.back())) v.remove_suffix(1);
      if (v != "v1") {
        throw Error(ErrorKind::InvalidConfig, "unsupported wire version '" + std::string(v) + "'",
                    line_no);
      }
    }
    return std::nullopt;
  }

  std::string_view fields[6];
  std::size_t n = 0;
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && !detail::is_space(line[j])) ++j;
    if (n == 6) {
      ++n;
      break;
    }
    fields[n++] = line.substr(i, j - i);
    i = j;
    while (i < line.size() && detail::is_space(line[i])) ++i;
  }
  const auto bad = [&](const std::string& why) {
    return Error(ErrorKind::MalformedLine, why + ": '" + std::string(line) + "'", line_no);
  };
  if (n != 3 && n != 5) throw bad("expected 3 or 5 fields");
  if (fields[0] != "I") throw bad("unknown record tag");

  TraceRecord r;
  std::uint64_t raw = 0;
  if (!detail::parse_hex(fields[1], r.pc, 16)) throw bad("bad pc");
  if (!detail::parse_hex(fields[2], raw, 8)) throw bad("bad encoding");
  if ((raw & 3) != 3 && raw > 0xffff) throw bad("compressed encoding wider than 16 bits");
  r.raw = static_cast<std::uint32_t>(raw);
  if (n == 5) {
    for (int k = 0; k < 2; ++k) {
      const std::string_view f = fields[3 + k];
      if (f == "-") continue;
      std::uint64_t v = 0;
      if (!detail::parse_hex(f, v, 16)) throw bad("bad register value");
      (k == 0 ? r.rs1_value : r.rs2_value) = v;
    }
  }
  return r;
}

// Inverse of parse_line, without the trailing newline.
inline std::string format_record(const TraceRecord& r) {
  char buf[96];
  char* p = buf;
  *p++ = 'I';
  *p++ = ' ';
  p = detail::write_hex(p, r.pc, 1);
  *p++ = ' ';
  p = detail::write_hex(p, r.raw, (r.raw & 3) == 3 ? 8 : 4);
  if (r.rs1_value || r.rs2_value) {
    for (const auto& v : {r.rs1_value, r.rs2_value}) {
      *p++ = ' ';
      if (v) p = detail::write_hex(p, *v, 1);
      else *p++ = '-';
    }
  }
  return std::string(buf, p);
}

// Streams records to a FILE*, header first.
class TraceWriter {
 public:
  explicit TraceWriter(std::FILE* out) : out_(out) {
    std::fwrite(kWireHeader.data(), 1, kWireHeader.size(), out_);
    std::fputc('\n', out_);
  }
  void write(const TraceRecord& r) {
    const std::string s = format_record(r);
    std::fwrite(s.data(), 1, s.size(), out_);
    std::fputc('\n', out_);
  }

 private:
  std::FILE* out_;
};

// Buffered line source over a file, named pipe or stdin ("-").
class LineReader {
 public:
  explicit LineReader(const std::string& path) {
    if (path == "-") {
      f_ = stdin;
    } else {
      f_ = std::fopen(path.c_str(), "rb");
      owned_ = true;
      if (f_ == nullptr) throw Error(ErrorKind::Io, "cannot open input '" + path + "'");
    }
    buf_.resize(1 << 20);
  }
  ~LineReader() {
    if (owned_ && f_) std::fclose(f_);
  }
  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  // Next line without its terminator; valid until the next call.
  bool next(std::string_view& line) {
    for (;;) {
      const char* start = buf_.data() + pos_;
      const void* nl = std::memchr(start, '\n', end_ - pos_);
      if (nl != nullptr) {
        const std::size_t len = static_cast<const char*>(nl) - start;
        line = std::string_view(start, len);
        pos_ += len + 1;
        ++line_no_;
        return true;
      }
      if (eof_) {
        if (pos_ == end_) return false;
        line = std::string_view(start, end_ - pos_);
        pos_ = end_;
        ++line_no_;
        return true;
      }
      fill();
    }
  }

  std::uint64_t line_no() const { return line_no_; }

 private:
  void fill() {
    if (pos_ > 0) {
      std::memmove(buf_.data(), buf_.data() + pos_, end_ - pos_);
      end_ -= pos_;
      pos_ = 0;
    }
    if (end_ == buf_.size()) buf_.resize(buf_.size() * 2);
    const std::size_t got = std::fread(buf_.data() + end_, 1, buf_.size() - end_, f_);
    end_ += got;
    if (got == 0) {
      if (std::ferror(f_)) throw Error(ErrorKind::Io, "read error on input");
      eof_ = true;
    }
  }

  std::FILE* f_ = nullptr;
  bool owned_ = false;
  std::vector<char> buf_;
  std::size_t pos_ = 0, end_ = 0;
  bool eof_ = false;
  std::uint64_t line_no_ = 0;
};

struct NumberedRecord {
  TraceRecord record;
  std::uint64_t line = 0;
};

// Unit of transfer between the parser and analyzer threads.
struct RecordBatch {
  std::vector<NumberedRecord> records;
  std::vector<Warning> warnings;   // permissive-mode skips
  std::exception_ptr error;        // fatal; ends the stream
};

// Parses `path` on a background thread and hands batches to the consumer
// through a bounded queue.
class ParserThread {
 public:
  static constexpr std::size_t kBatch = 4096;
  static constexpr std::size_t kQueueDepth = 16;

  ParserThread(std::string path, bool strict) : queue_(kQueueDepth) {
    thread_ = std::thread([this, path = std::move(path), strict] { run(path, strict); });
  }
  ~ParserThread() {
    queue_.close();
    if (thread_.joinable()) thread_.join();
  }
  ParserThread(const ParserThread&) = delete;
  ParserThread& operator=(const ParserThread&) = delete;

  // Next batch, or nullopt at end of stream.
  std::optional<RecordBatch> next() { return queue_.pop(); }

 private:
  void run(const std::string& path, bool strict) {
    RecordBatch batch;
    batch.records.reserve(kBatch);
    try {
      LineReader reader(path);
      std::string_view line;
      while (reader.next(line)) {
        try {
          if (auto r = parse_line(line, reader.line_no())) {
            batch.records.push_back({*r, reader.line_no()});
          }
        } catch (const Error& e) {
          if (strict || e.kind() != ErrorKind::MalformedLine) throw;
          batch.warnings.push_back({e.kind(), e.message(), reader.line_no()});
        }
        if (batch.records.size() == kBatch) {
          if (!queue_.push(std::move(batch))) return;
          batch = RecordBatch{};
          batch.records.reserve(kBatch);
        }
      }
    } catch (...) {
      batch.error = std::current_exception();
    }
    if (!batch.records.empty() || !batch.warnings.empty() || batch.error) {
      queue_.push(std::move(batch));
    }
    queue_.close();
  }

  BoundedQueue<RecordBatch> queue_;
  std::thread thread_;
};

}  // namespace rave
