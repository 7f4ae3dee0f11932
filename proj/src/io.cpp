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

#include "delib/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "delib/error.hpp"

namespace delib {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void parse_fail(const std::string& file, std::size_t line, std::size_t col,
                             const std::string& what) {
  fail_data(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return std::move(out).str();
}

// RFC-4180-ish CSV: quoted fields may contain commas, quotes ("") and
// newlines. Returns rows of fields; keeps track of source line numbers.
struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

std::vector<CsvRow> parse_csv(const std::string& file, const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&]() {
    row.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&]() {
    end_field();
    row.line = row_line;
    rows.push_back(std::move(row));
    row = {};
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!row_started) {
      row_started = true;
      row_line = line;
    }
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"') {
      if (!field.empty()) parse_fail(file, line, i, "unexpected quote inside unquoted field");
      quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_row();
      ++line;
    } else {
      field += c;
    }
  }
  if (quoted) parse_fail(file, line, 1, "unterminated quoted field");
  if (row_started || !field.empty()) end_row();

  // Drop fully blank trailing rows.
  while (!rows.empty() && rows.back().fields.size() == 1 && rows.back().fields[0].empty()) {
    rows.pop_back();
  }
  return rows;
}

std::int64_t to_int(const std::string& file, std::size_t line, std::size_t col,
                    const std::string& s, const char* what) {
  std::int64_t v = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  if (!s.empty() && s.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    parse_fail(file, line, col, std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

double to_real(const std::string& file, std::size_t line, std::size_t col,
               const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    parse_fail(file, line, col, std::string("invalid ") + what + " '" + s + "'");
  }
}

std::set<std::string> split_tags(const std::string& joined) {
  std::set<std::string> tags;
  std::string cur;
  for (char c : joined) {
    if (c == ';') {
      if (!cur.empty()) tags.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tags.insert(cur);
  return tags;
}

enum class Table { Proposals, Events, Views };

bool looks_like_jsonl(const std::string& path, const std::string& text) {
  const fs::path p(path);
  const std::string ext = p.extension().string();
  if (ext == ".jsonl" || ext == ".ndjson") return true;
  if (ext == ".csv") return false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{';
  }
  return false;
}

// --- CSV tables ---------------------------------------------------------

std::map<std::string, std::size_t> header_index(const std::string& file,
                                                const CsvRow& header) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < header.fields.size(); ++i) idx[header.fields[i]] = i;
  if (idx.empty()) parse_fail(file, header.line, 1, "empty header row");
  return idx;
}

const std::string* field_of(const CsvRow& row, const std::map<std::string, std::size_t>& idx,
                            const std::string& name) {
  auto it = idx.find(name);
  if (it == idx.end() || it->second >= row.fields.size()) return nullptr;
  return &row.fields[it->second];
}

std::string require_field(const std::string& file, const CsvRow& row,
                          const std::map<std::string, std::size_t>& idx,
                          const std::string& name) {
  const std::string* f = field_of(row, idx, name);
  if (f == nullptr || f->empty()) {
    parse_fail(file, row.line, idx.count(name) ? idx.at(name) + 1 : 1,
               "missing required field '" + name + "'");
  }
  return *f;
}

std::vector<Proposal> proposals_from_csv(const std::string& file, const std::string& text) {
  auto rows = parse_csv(file, text);
  if (rows.empty()) parse_fail(file, 1, 1, "missing header row");
  const auto idx = header_index(file, rows[0]);
  for (const char* col : {"id", "title", "author", "submitted_at"}) {
    if (idx.count(col) == 0) parse_fail(file, rows[0].line, 1, std::string("missing column '") + col + "'");
  }

  std::vector<Proposal> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    Proposal p;
    p.id = require_field(file, row, idx, "id");
    p.title = require_field(file, row, idx, "title");
    p.author = require_field(file, row, idx, "author");
    p.submitted_at =
        to_int(file, row.line, idx.at("submitted_at") + 1,
               require_field(file, row, idx, "submitted_at"), "timestamp");
    if (const std::string* f = field_of(row, idx, "tags"); f != nullptr) {
      p.tags = split_tags(*f);
    }
    if (const std::string* f = field_of(row, idx, "cost"); f != nullptr && !f->empty()) {
      const double cost = to_real(file, row.line, idx.at("cost") + 1, *f, "cost");
      if (cost < 0) parse_fail(file, row.line, idx.at("cost") + 1, "negative cost");
      p.cost = cost;
    }
    if (const std::string* f = field_of(row, idx, "comment_count"); f != nullptr && !f->empty()) {
      p.comment_count =
          to_int(file, row.line, idx.at("comment_count") + 1, *f, "comment count");
      if (p.comment_count < 0) {
        parse_fail(file, row.line, idx.at("comment_count") + 1, "negative comment count");
      }
    }
    if (const std::string* f = field_of(row, idx, "body"); f != nullptr) p.body = *f;
    out.push_back(std::move(p));
  }
  return out;
}

Polarity parse_polarity(const std::string& file, std::size_t line, std::size_t col,
                        const std::string& s) {
  if (s == "1" || s == "+1") return Polarity::Approve;
  if (s == "-1") return Polarity::Disapprove;
  parse_fail(file, line, col, "invalid polarity '" + s + "' (want +1 or -1)");
}

std::vector<EvaluationEvent> events_from_csv(const std::string& file,
                                             const std::string& text) {
  auto rows = parse_csv(file, text);
  if (rows.empty()) parse_fail(file, 1, 1, "missing header row");
  const auto idx = header_index(file, rows[0]);
  for (const char* col : {"user", "proposal", "polarity", "at"}) {
    if (idx.count(col) == 0) parse_fail(file, rows[0].line, 1, std::string("missing column '") + col + "'");
  }

  std::vector<EvaluationEvent> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    EvaluationEvent e;
    e.user = require_field(file, row, idx, "user");
    e.proposal = require_field(file, row, idx, "proposal");
    e.polarity = parse_polarity(file, row.line, idx.at("polarity") + 1,
                                require_field(file, row, idx, "polarity"));
    e.at = to_int(file, row.line, idx.at("at") + 1, require_field(file, row, idx, "at"),
                  "timestamp");
    out.push_back(std::move(e));
  }
  return out;
}

InspectionStats views_from_csv(const std::string& file, const std::string& text) {
  auto rows = parse_csv(file, text);
  if (rows.empty()) parse_fail(file, 1, 1, "missing header row");
  const auto idx = header_index(file, rows[0]);
  for (const char* col : {"proposal", "views"}) {
    if (idx.count(col) == 0) parse_fail(file, rows[0].line, 1, std::string("missing column '") + col + "'");
  }

  InspectionStats stats;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    const std::string pid = require_field(file, row, idx, "proposal");
    const std::int64_t v = to_int(file, row.line, idx.at("views") + 1,
                                  require_field(file, row, idx, "views"), "view count");
    if (v < 0) parse_fail(file, row.line, idx.at("views") + 1, "negative view count");
    stats.views[pid] += v;
  }
  return stats;
}

// --- JSON-lines tables ---------------------------------------------------

template <typename Fn>
void for_each_jsonl(const std::string& file, const std::string& text, Fn&& fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      parse_fail(file, lineno, e.byte, "invalid JSON");
    }
    if (!obj.is_object()) parse_fail(file, lineno, 1, "expected a JSON object");
    fn(obj, lineno);
  }
}

template <typename T>
T json_field(const std::string& file, std::size_t line, const json& obj,
             const char* name) {
  if (!obj.contains(name)) {
    parse_fail(file, line, 1, std::string("missing field '") + name + "'");
  }
  try {
    return obj.at(name).get<T>();
  } catch (const json::exception&) {
    parse_fail(file, line, 1, std::string("invalid value for field '") + name + "'");
  }
}

std::vector<Proposal> proposals_from_jsonl(const std::string& file,
                                           const std::string& text) {
  std::vector<Proposal> out;
  for_each_jsonl(file, text, [&](const json& obj, std::size_t line) {
    Proposal p;
    p.id = json_field<std::string>(file, line, obj, "id");
    p.title = json_field<std::string>(file, line, obj, "title");
    p.author = json_field<std::string>(file, line, obj, "author");
    p.submitted_at = json_field<std::int64_t>(file, line, obj, "submitted_at");
    if (obj.contains("tags")) {
      const json& tags = obj.at("tags");
      if (tags.is_string()) {
        p.tags = split_tags(tags.get<std::string>());
      } else if (tags.is_array()) {
        for (const json& t : tags) p.tags.insert(t.get<std::string>());
      } else {
        parse_fail(file, line, 1, "tags must be an array or a ';'-joined string");
      }
    }
    if (obj.contains("cost") && !obj.at("cost").is_null()) {
      p.cost = json_field<double>(file, line, obj, "cost");
      if (*p.cost < 0) parse_fail(file, line, 1, "negative cost");
    }
    if (obj.contains("comment_count")) {
      p.comment_count = json_field<std::int64_t>(file, line, obj, "comment_count");
      if (p.comment_count < 0) parse_fail(file, line, 1, "negative comment count");
    }
    if (obj.contains("body")) p.body = json_field<std::string>(file, line, obj, "body");
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<EvaluationEvent> events_from_jsonl(const std::string& file,
                                               const std::string& text) {
  std::vector<EvaluationEvent> out;
  for_each_jsonl(file, text, [&](const json& obj, std::size_t line) {
    EvaluationEvent e;
    e.user = json_field<std::string>(file, line, obj, "user");
    e.proposal = json_field<std::string>(file, line, obj, "proposal");
    const std::int64_t pol = json_field<std::int64_t>(file, line, obj, "polarity");
    if (pol != 1 && pol != -1) parse_fail(file, line, 1, "invalid polarity (want +1 or -1)");
    e.polarity = pol == 1 ? Polarity::Approve : Polarity::Disapprove;
    e.at = json_field<std::int64_t>(file, line, obj, "at");
    out.push_back(std::move(e));
  });
  return out;
}

InspectionStats views_from_jsonl(const std::string& file, const std::string& text) {
  InspectionStats stats;
  for_each_jsonl(file, text, [&](const json& obj, std::size_t line) {
    const std::string pid = json_field<std::string>(file, line, obj, "proposal");
    const std::int64_t v = json_field<std::int64_t>(file, line, obj, "views");
    if (v < 0) parse_fail(file, line, 1, "negative view count");
    stats.views[pid] += v;
  });
  return stats;
}

std::string find_table(const std::string& dir, const std::string& stem, bool required) {
  for (const char* ext : {".csv", ".jsonl", ".ndjson"}) {
    const fs::path candidate = fs::path(dir) / (stem + ext);
    if (fs::exists(candidate)) return candidate.string();
  }
  if (required) fail_io("no " + stem + ".{csv,jsonl} in '" + dir + "'");
  return {};
}

}  // namespace

Dataset load_dataset(const std::string& proposals_path, const std::string& events_path,
                     const std::optional<std::string>& views_path) {
  Dataset ds;

  const std::string ptext = read_file(proposals_path);
  ds.proposals = looks_like_jsonl(proposals_path, ptext)
                     ? proposals_from_jsonl(proposals_path, ptext)
                     : proposals_from_csv(proposals_path, ptext);

  std::set<ProposalId> known;
  for (const Proposal& p : ds.proposals) {
    if (!known.insert(p.id).second) fail_data("duplicate proposal id '" + p.id + "'");
  }

  const std::string etext = read_file(events_path);
  ds.events = looks_like_jsonl(events_path, etext) ? events_from_jsonl(events_path, etext)
                                                   : events_from_csv(events_path, etext);
  for (const EvaluationEvent& e : ds.events) {
    if (known.count(e.proposal) == 0) {
      fail_data("event references unknown proposal '" + e.proposal + "'");
    }
  }

  if (views_path.has_value() && !views_path->empty()) {
    const std::string vtext = read_file(*views_path);
    ds.views = looks_like_jsonl(*views_path, vtext) ? views_from_jsonl(*views_path, vtext)
                                                    : views_from_csv(*views_path, vtext);
    ds.has_views = true;
    for (const auto& [pid, v] : ds.views.views) {
      if (known.count(pid) == 0) {
        fail_data("view entry references unknown proposal '" + pid + "'");
      }
    }
  }
  return ds;
}

Dataset load_dataset_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) fail_io("input directory '" + dir + "' does not exist");
  const std::string proposals = find_table(dir, "proposals", true);
  const std::string events = find_table(dir, "events", true);
  const std::string views = find_table(dir, "views", false);
  return load_dataset(proposals, events,
                      views.empty() ? std::nullopt : std::optional<std::string>(views));
}

AttentionModel parse_attention(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "geometric") {
    try {
      return AttentionModel::geometric(std::stod(arg));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail_invalid("invalid attention spec '" + text + "'");
    }
  }
  if (kind == "topk") {
    try {
      return AttentionModel::top_k_model(std::stoi(arg));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail_invalid("invalid attention spec '" + text + "'");
    }
  }
  fail_invalid("unknown attention model '" + text + "' (want geometric:p or topk:k)");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open scenario file '" + path + "'");

  Scenario sc;
  sc.attention = AttentionModel::geometric(0.7);

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trimmed(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      parse_fail(path, lineno, 1, "expected 'key = value'");
    }
    const std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }

    try {
      if (key == "n_users") {
        sc.n_users = std::stoi(value);
      } else if (key == "groups") {
        sc.groups.clear();
        for (const std::string& part : split(value, ',')) {
          const std::string item = trimmed(part);
          if (item.empty()) continue;
          const auto fields = split(item, ':');
          if (fields.size() != 3) {
            parse_fail(path, lineno, 1, "group entry must be size:pool:prob");
          }
          GroupSpec g;
          g.size = std::stoi(trimmed(fields[0]));
          g.pool_size = std::stoi(trimmed(fields[1]));
          g.approval_prob = std::stod(trimmed(fields[2]));
          sc.groups.push_back(g);
        }
      } else if (key == "arrivals") {
        if (value == "all-at-start") {
          sc.arrivals.kind = ArrivalKind::AllAtStart;
        } else if (value == "uniform") {
          sc.arrivals.kind = ArrivalKind::UniformOverHorizon;
        } else if (value.rfind("burst:", 0) == 0) {
          sc.arrivals.kind = ArrivalKind::Burst;
          sc.arrivals.burst_ticks.clear();
          for (const std::string& t : split(value.substr(6), ',')) {
            sc.arrivals.burst_ticks.push_back(std::stoll(trimmed(t)));
          }
        } else {
          parse_fail(path, lineno, 1, "unknown arrivals '" + value + "'");
        }
      } else if (key == "horizon") {
        sc.horizon = std::stoll(value);
      } else if (key == "sessions_per_tick") {
        sc.sessions_per_tick = std::stoi(value);
      } else if (key == "attention") {
        sc.attention = parse_attention(value);
      } else if (key == "resort_every") {
        sc.resort_every = std::stoll(value);
      } else if (key == "ticks_per_day") {
        sc.ticks_per_day = std::stoll(value);
      } else if (key == "report_k") {
        sc.report_k = std::stoi(value);
      } else if (key == "preset" || key == "preset_profile") {
        sc.preset_profile = value;
      } else {
        parse_fail(path, lineno, 1, "unknown scenario key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      parse_fail(path, lineno, 1, "invalid value '" + value + "' for key '" + key + "'");
    }
  }

  try {
    sc.validate();
  } catch (const Error& e) {
    fail_data(path + ": " + e.what());
  }
  return sc;
}

}  // namespace delib
