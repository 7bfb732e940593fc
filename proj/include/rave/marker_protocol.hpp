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

// In-band marker protocol: trace gating, user events and name transmission.
//
// Naming sequences:
//   lui x0,e; li x0,-1; lui x0,c0; ...; li x0,-1           names event e
//   lui x0,e; lui x0,v; li x0,-1; lui x0,c0; ...; li x0,-1  names value v of e

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rave/error.hpp"
#include "rave/isa.hpp"

namespace rave {

struct UserEvent {
  std::uint64_t event_id = 0;
  std::uint64_t value_id = 0;
  std::uint64_t instr_index = 0;
  friend bool operator==(const UserEvent&, const UserEvent&) = default;
};

struct NameEvent {
  std::uint64_t event_id = 0;
  std::string name;
  friend bool operator==(const NameEvent&, const NameEvent&) = default;
};

struct NameValue {
  std::uint64_t event_id = 0;
  std::uint64_t value_id = 0;
  std::string name;
  friend bool operator==(const NameValue&, const NameValue&) = default;
};

struct ResetAction {
  friend bool operator==(ResetAction, ResetAction) = default;
};

struct TraceToggle {
  bool enabled = true;
  friend bool operator==(TraceToggle, TraceToggle) = default;
};

using ProtocolAction =
    std::variant<std::monostate, UserEvent, NameEvent, NameValue, ResetAction, TraceToggle>;

// Appends U+FFFD.
inline void append_replacement(std::string& out) { out += "\xEF\xBF\xBD"; }

// Replaces every invalid UTF-8 sequence in `bytes` with U+FFFD.
inline std::string utf8_lossy(const std::string& bytes) {
  std::string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    std::size_t len = 0;
    std::uint32_t min = 0;
    if (c < 0x80) len = 1;
    else if ((c & 0xE0) == 0xC0) { len = 2; min = 0x80; }
    else if ((c & 0xF0) == 0xE0) { len = 3; min = 0x800; }
    else if ((c & 0xF8) == 0xF0) { len = 4; min = 0x10000; }
    if (len == 0 || i + len > n) {
      append_replacement(out);
      ++i;
      continue;
    }
    std::uint32_t cp = len == 1 ? c : (c & (0x7F >> len));
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    if (ok && len > 1 && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
    if (!ok) {
      append_replacement(out);
      ++i;
      continue;
    }
    out.append(bytes, i, len);
    i += len;
  }
  return out;
}

// One byte per payload: the low 8 bits of each 20-bit immediate.
inline std::string decode_name_chars(std::span<const std::uint32_t> payloads) {
  std::string bytes;
  bytes.reserve(payloads.size());
  for (std::uint32_t p : payloads) bytes.push_back(static_cast<char>(p & 0xff));
  return utf8_lossy(bytes);
}

class MarkerProtocol {
 public:
  // Markers after which an undelimited lui payload is dropped.
  static constexpr unsigned kPayloadWindow = 2;

  explicit MarkerProtocol(bool start_enabled = true, bool strict = true,
                          Diagnostics* diag = nullptr)
      : tracing_enabled_(start_enabled), strict_(strict), diag_(diag) {}

  bool tracing_enabled() const { return tracing_enabled_; }
  bool naming() const { return capture_.has_value(); }

  // `reg_values` carries (src1, src2) register contents for EventAndValue.
  ProtocolAction on_marker(const MarkerKind& kind,
                           std::optional<std::pair<std::uint64_t, std::uint64_t>> reg_values,
                           std::uint64_t instr_index,
                           std::optional<std::uint64_t> line = std::nullopt) {
    line_ = line;
    if (const auto* lui = std::get_if<marker::LuiPayload>(&kind)) {
      if (capture_) {
        capture_->chars.push_back(lui->imm);
        return {};
      }
      age_pending();
      pending_.push_back({lui->imm, 0});
      return {};
    }
    if (std::holds_alternative<marker::NameDelimiter>(kind)) return on_delimiter();

    if (!capture_) age_pending();
    if (std::holds_alternative<marker::StartTrace>(kind)) {
      tracing_enabled_ = true;
      return TraceToggle{true};
    }
    if (std::holds_alternative<marker::StopTrace>(kind)) {
      tracing_enabled_ = false;
      return TraceToggle{false};
    }
    if (std::holds_alternative<marker::RestartTrace>(kind)) return ResetAction{};

    // EventAndValue
    if (!reg_values) {
      const std::string msg = "event/value marker without register values";
      if (strict_) throw Error(ErrorKind::MissingRegisterValues, msg, line_);
      warn(ErrorKind::MissingRegisterValues, msg);
      return {};
    }
    return UserEvent{reg_values->first, reg_values->second, instr_index};
  }

  // End of stream: report unterminated names and orphan payloads.
  void finish() {
    if (capture_) {
      warn(ErrorKind::MalformedNameSequence, "stream ended inside a name; partial name dropped");
      capture_.reset();
    }
    if (!pending_.empty()) {
      warn(ErrorKind::MalformedNameSequence,
           "stream ended with " + std::to_string(pending_.size()) + " undelimited lui payload(s)");
      pending_.clear();
    }
  }

 private:
  struct Pending {
    std::uint32_t imm;
    unsigned age;
  };
  struct Capture {
    std::optional<std::uint32_t> event_id;
    std::optional<std::uint32_t> value_id;
    std::vector<std::uint32_t> chars;
  };

  void age_pending() {
    for (auto& p : pending_) ++p.age;
    while (!pending_.empty() && pending_.front().age >= kPayloadWindow) {
      warn(ErrorKind::MalformedNameSequence,
           "lui payload " + std::to_string(pending_.front().imm) + " not followed by a delimiter");
      pending_.pop_front();
    }
  }

  ProtocolAction on_delimiter() {
    if (!capture_) {
      Capture c;
      if (pending_.size() == 1) {
        c.event_id = pending_[0].imm;
      } else if (pending_.size() == 2) {
        c.event_id = pending_[0].imm;
        c.value_id = pending_[1].imm;
      }
      pending_.clear();
      capture_ = std::move(c);
      return {};
    }
    Capture c = std::move(*capture_);
    capture_.reset();
    std::string name = decode_name_chars(c.chars);
    if (!c.event_id) {
      warn(ErrorKind::MalformedNameSequence, "name \"" + name + "\" has no event id; dropped");
      return {};
    }
    if (c.value_id) return NameValue{*c.event_id, *c.value_id, std::move(name)};
    return NameEvent{*c.event_id, std::move(name)};
  }

  void warn(ErrorKind kind, std::string msg) {
    if (diag_) diag_->warn(kind, std::move(msg), line_);
  }

  bool tracing_enabled_;
  bool strict_;
  Diagnostics* diag_;
  std::deque<Pending> pending_;
  std::optional<Capture> capture_;
  std::optional<std::uint64_t> line_;
};

}  // namespace rave
