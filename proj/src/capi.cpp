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

#include "delib/delib.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "delib/commands.hpp"
#include "delib/error.hpp"
#include "delib/io.hpp"
#include "delib/method.hpp"

struct delib_dataset {
  delib::Dataset data;
};

namespace {

thread_local std::string t_last_error;

delib_status status_of(delib::Errc code) {
  switch (code) {
    case delib::Errc::invalid_argument:
      return DELIB_ERR_INVALID;
    case delib::Errc::data:
      return DELIB_ERR_DATA;
    case delib::Errc::io:
      return DELIB_ERR_IO;
  }
  return DELIB_ERR_INTERNAL;
}

template <typename Fn>
delib_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return DELIB_OK;
  } catch (const delib::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return DELIB_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& text) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (buffer == nullptr) throw std::bad_alloc();
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

nlohmann::json parse_options(const char* options_json) {
  if (options_json == nullptr) delib::fail_invalid("options JSON is null");
  try {
    return nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::parse_error& e) {
    delib::fail_invalid(std::string("options are not valid JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* delib_version(void) { return "0.1.0"; }

const char* delib_status_name(delib_status status) {
  switch (status) {
    case DELIB_OK:
      return "ok";
    case DELIB_ERR_INVALID:
      return "invalid-argument";
    case DELIB_ERR_DATA:
      return "data-error";
    case DELIB_ERR_IO:
      return "io-error";
    case DELIB_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

const char* delib_methods(void) {
  static const std::string joined = [] {
    std::string out;
    for (const std::string& name : delib::method_names()) {
      if (!out.empty()) out += ",";
      out += name;
    }
    return out;
  }();
  return joined.c_str();
}

const char* delib_last_error(void) { return t_last_error.c_str(); }

void delib_buffer_free(char* buffer) { std::free(buffer); }

delib_status delib_dataset_open(const char* proposals_path, const char* events_path,
                                const char* views_path, delib_dataset** out) {
  return guarded([&] {
    if (proposals_path == nullptr || events_path == nullptr || out == nullptr) {
      delib::fail_invalid("dataset paths and out pointer must not be null");
    }
    auto handle = std::make_unique<delib_dataset>();
    handle->data = delib::load_dataset(
        proposals_path, events_path,
        views_path == nullptr ? std::nullopt
                              : std::optional<std::string>(views_path));
    *out = handle.release();
  });
}

delib_status delib_dataset_open_dir(const char* dir, delib_dataset** out) {
  return guarded([&] {
    if (dir == nullptr || out == nullptr) {
      delib::fail_invalid("directory and out pointer must not be null");
    }
    auto handle = std::make_unique<delib_dataset>();
    handle->data = delib::load_dataset_dir(dir);
    *out = handle.release();
  });
}

void delib_dataset_close(delib_dataset* dataset) { delete dataset; }

size_t delib_dataset_proposal_count(const delib_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->data.proposals.size();
}

size_t delib_dataset_event_count(const delib_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->data.events.size();
}

delib_status delib_rank(const delib_dataset* dataset, const char* options_json,
                        char** out_json) {
  return guarded([&] {
    if (dataset == nullptr || out_json == nullptr) {
      delib::fail_invalid("dataset and out pointer must not be null");
    }
    *out_json = copy_out(delib::command_rank(dataset->data, parse_options(options_json)));
  });
}

delib_status delib_compare(const delib_dataset* dataset, const char* options_json,
                           char** out_json) {
  return guarded([&] {
    if (dataset == nullptr || out_json == nullptr) {
      delib::fail_invalid("dataset and out pointer must not be null");
    }
    *out_json = copy_out(delib::command_compare(dataset->data, parse_options(options_json)));
  });
}

delib_status delib_simulate(const char* options_json, char** out_json) {
  return guarded([&] {
    if (out_json == nullptr) delib::fail_invalid("out pointer must not be null");
    *out_json = copy_out(delib::command_simulate(parse_options(options_json)));
  });
}

}  // extern "C"
