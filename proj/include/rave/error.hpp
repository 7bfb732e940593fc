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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rave {

enum class ErrorKind : std::uint8_t {
  UndecodableEncoding,
  UnknownMarkerImmediate,
  UnsupportedSew,
  MissingAvl,
  VectorStateUnknown,
  MissingRegisterValues,
  MalformedNameSequence,
  CloseWithoutOpen,
  MalformedLine,
  InvalidRatio,
  InvalidConfig,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndecodableEncoding: return "UndecodableEncoding";
    case ErrorKind::UnknownMarkerImmediate: return "UnknownMarkerImmediate";
    case ErrorKind::UnsupportedSew: return "UnsupportedSew";
    case ErrorKind::MissingAvl: return "MissingAvl";
    case ErrorKind::VectorStateUnknown: return "VectorStateUnknown";
    case ErrorKind::MissingRegisterValues: return "MissingRegisterValues";
    case ErrorKind::MalformedNameSequence: return "MalformedNameSequence";
    case ErrorKind::CloseWithoutOpen: return "CloseWithoutOpen";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidRatio: return "InvalidRatio";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// Fatal analysis error. `line` is the 1-based trace line when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::uint64_t> line = std::nullopt)
      : std::runtime_error(format(kind, what, line)), kind_(kind), line_(line), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::uint64_t> line() const noexcept { return line_; }
  // Message without the kind and line prefix.
  const std::string& message() const noexcept { return message_; }

  // Same error located at `line`, unless it already carries one.
  Error at(std::uint64_t line) const {
    return line_ ? *this : Error(kind_, message_, line);
  }

 private:
  static std::string format(ErrorKind kind, const std::string& what,
                            std::optional<std::uint64_t> line) {
    std::string out(to_string(kind));
    if (line) out += " at line " + std::to_string(*line);
    out += ": ";
    out += what;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::uint64_t> line_;
  std::string message_;
};

struct Warning {
  ErrorKind kind;
  std::string message;
  std::optional<std::uint64_t> line;
};

// Collects non-fatal conditions. Keeps the first `keep` messages verbatim and
// a count of everything.
class Diagnostics {
 public:
  explicit Diagnostics(std::size_t keep = 64) : keep_(keep) {}

  void warn(ErrorKind kind, std::string message,
            std::optional<std::uint64_t> line = std::nullopt) {
    ++total_;
    if (sink_) sink_(Warning{kind, message, line});
    if (kept_.size() < keep_) kept_.push_back({kind, std::move(message), line});
  }

  // Optional live callback, invoked for every warning.
  void set_sink(std::function<void(const Warning&)> sink) { sink_ = std::move(sink); }

  std::size_t total() const noexcept { return total_; }
  const std::vector<Warning>& kept() const noexcept { return kept_; }

  std::size_t count(ErrorKind kind) const {
    std::size_t n = 0;
    for (const auto& w : kept_) n += (w.kind == kind);
    return n;
  }

  void clear() {
    kept_.clear();
    total_ = 0;
  }

 private:
  std::size_t keep_;
  std::size_t total_ = 0;
  std::vector<Warning> kept_;
  std::function<void(const Warning&)> sink_;
};

}  // namespace rave
