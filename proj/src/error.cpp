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

#include "delib/error.hpp"

#include <atomic>
#include <iostream>

namespace delib {
namespace {

void default_warning_handler(const std::string& message) {
  std::cerr << "delib: warning: " << message << "\n";
}

std::atomic<WarningHandler> g_handler{&default_warning_handler};

}  // namespace

void set_warning_handler(WarningHandler handler) {
  g_handler.store(handler != nullptr ? handler : &default_warning_handler);
}

void warn(const std::string& message) { g_handler.load()(message); }

}  // namespace delib
