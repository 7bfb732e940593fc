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

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "rave/error.hpp"

namespace rave {

inline Error io_error(const std::string& what, const std::string& path) {
  return Error(ErrorKind::Io, what + " '" + path + "': " + std::strerror(errno));
}

// Anonymous temporary file that accumulates output until it is either
// discarded (restart) or copied behind a header into its final destination.
class Spool {
 public:
  Spool() : f_(std::tmpfile()) {
    if (f_ == nullptr) throw io_error("cannot create temporary file in", P_tmpdir);
  }
  ~Spool() {
    if (f_) std::fclose(f_);
  }
  Spool(const Spool&) = delete;
  Spool& operator=(const Spool&) = delete;

  void write(std::string_view s) { std::fwrite(s.data(), 1, s.size(), f_); }
  void put(char c) { std::fputc(c, f_); }

  void truncate() {
    std::fflush(f_);
    if (::ftruncate(::fileno(f_), 0) != 0) throw io_error("cannot truncate spool for", "tmpfile");
    std::rewind(f_);
  }

  // Writes `header` followed by the spooled bytes to `path`.
  void copy_to(const std::string& path, std::string_view header) {
    std::FILE* out = std::fopen(path.c_str(), "wb");
    if (out == nullptr) throw io_error("cannot open", path);
    std::fwrite(header.data(), 1, header.size(), out);
    std::fflush(f_);
    std::rewind(f_);
    std::vector<char> buf(1 << 16);
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f_)) > 0) {
      if (std::fwrite(buf.data(), 1, n, out) != n) {
        std::fclose(out);
        throw io_error("cannot write", path);
      }
    }
    std::fseek(f_, 0, SEEK_END);
    if (std::ferror(f_)) {
      std::fclose(out);
      throw io_error("cannot read spool for", path);
    }
    if (std::fclose(out) != 0) throw io_error("cannot write", path);
  }

 private:
  std::FILE* f_;
};

// Whole-file write with path context on failure.
inline void write_file(const std::string& path, std::string_view content) {
  std::FILE* out = std::fopen(path.c_str(), "wb");
  if (out == nullptr) throw io_error("cannot open", path);
  const bool ok = std::fwrite(content.data(), 1, content.size(), out) == content.size();
  if (std::fclose(out) != 0 || !ok) throw io_error("cannot write", path);
}

}  // namespace rave
