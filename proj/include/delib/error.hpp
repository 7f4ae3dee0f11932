// Copyright 2026 The delib Authors
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

#ifndef DELIB_ERROR_HPP
#define DELIB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace delib {

// Error categories, mirrored by the C API status codes and the CLI
// exit codes (invalid_argument -> usage error, data/io -> data error).
enum class Errc {
  invalid_argument,
  data,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail_invalid(const std::string& what) {
  throw Error(Errc::invalid_argument, what);
}
[[noreturn]] inline void fail_data(const std::string& what) {
  throw Error(Errc::data, what);
}
[[noreturn]] inline void fail_io(const std::string& what) {
  throw Error(Errc::io, what);
}

// Non-fatal data warnings (e.g. view counts clamped up to approval counts).
// The default handler writes one line to stderr.
using WarningHandler = void (*)(const std::string& message);
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace delib

#endif  // DELIB_ERROR_HPP
