// Copyright 2026 The trapq Authors
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

#include "trapq/schedule_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trapq {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ScheduleParseError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

double number_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) {
    throw ScheduleParseError(where + "." + key + ": expected a number, got " + v.dump());
  }
  return v.get<double>();
}

int integer_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) {
    throw ScheduleParseError(where + "." + key + ": expected an integer, got " + v.dump());
  }
  return v.get<int>();
}

}  // namespace

std::string serialize(const ScheduleFile& file) {
  json pulses = json::array();
  for (const Pulse& p : file.schedule.pulses) {
    pulses.push_back(
        {{"kind", std::string(to_string(p.kind))}, {"theta", p.theta}, {"phi", p.phi}});
  }
  json doc = {
      {"version", file.version},
      {"name", file.schedule.name},
      {"config", {{"n_cyc", file.cfg.n_cyc}, {"n_ax", file.cfg.n_ax}, {"eta", file.eta}}},
      {"global_phase", file.schedule.global_phase},
      {"pulses", std::move(pulses)}};
  return doc.dump(2) + "\n";
}

ScheduleFile parse_schedule(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset to a line number for the message.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + std::ptrdiff_t(upto), '\n');
    throw ScheduleParseError("line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) throw ScheduleParseError("schedule: expected a JSON object");

  ScheduleFile out;
  out.version = integer_at(doc, "version", "schedule");
  if (out.version != kScheduleFormatVersion) {
    throw ScheduleParseError(
        "schedule.version: unsupported version " + std::to_string(out.version));
  }
  const json& cfg = require(doc, "config", "schedule");
  try {
    out.cfg = SpaceConfig(integer_at(cfg, "n_cyc", "config"), integer_at(cfg, "n_ax", "config"));
    out.eta = LambDicke(number_at(cfg, "eta", "config")).value();
  } catch (const std::invalid_argument& e) {
    throw ScheduleParseError(std::string("config: ") + e.what());
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ScheduleParseError("schedule.name: expected a string");
    out.schedule.name = doc["name"].get<std::string>();
  }
  if (doc.contains("global_phase")) {
    out.schedule.global_phase = number_at(doc, "global_phase", "schedule");
  }
  const json& pulses = require(doc, "pulses", "schedule");
  if (!pulses.is_array()) throw ScheduleParseError("schedule.pulses: expected an array");
  for (std::size_t k = 0; k < pulses.size(); ++k) {
    const std::string where = "pulses[" + std::to_string(k) + "]";
    const json& p = pulses[k];
    if (!p.is_object()) throw ScheduleParseError(where + ": expected an object");
    const json& kind = require(p, "kind", where);
    if (!kind.is_string()) throw ScheduleParseError(where + ".kind: expected a string");
    Pulse pulse;
    try {
      pulse.kind = parse_pulse_kind(kind.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ScheduleParseError(where + ".kind: " + e.what());
    }
    pulse.theta = number_at(p, "theta", where);
    pulse.phi = number_at(p, "phi", where);
    if (!std::isfinite(pulse.theta) || !std::isfinite(pulse.phi)) {
      throw ScheduleParseError(where + ": angles must be finite");
    }
    out.schedule.pulses.push_back(pulse);
  }
  return out;
}

ScheduleFile read_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScheduleParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_schedule(buf.str());
  } catch (const ScheduleParseError& e) {
    throw ScheduleParseError(path.string() + ": " + e.what());
  }
}

void write_schedule(const std::filesystem::path& path, const ScheduleFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(file);
}

}  // namespace trapq
