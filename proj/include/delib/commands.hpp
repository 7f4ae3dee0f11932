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
//
// Option-driven entry points shared by the C API and (through it) the CLI.
// Each takes the flat options object documented in the README and returns
// pretty-printed JSON.

#ifndef DELIB_COMMANDS_HPP
#define DELIB_COMMANDS_HPP

#include <string>

#include <json.hpp>

#include "delib/io.hpp"

namespace delib {

std::string command_rank(const Dataset& dataset, const nlohmann::json& options);
std::string command_compare(const Dataset& dataset, const nlohmann::json& options);
std::string command_simulate(const nlohmann::json& options);

}  // namespace delib

#endif  // DELIB_COMMANDS_HPP
