// Copyright 2026 The Frame Authors
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

#ifndef FRAME_CASE_IO_HPP
#define FRAME_CASE_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frame/model.hpp"

namespace frame {

/// On-disk description of one victim net: a set of attacker scenarios keyed
/// by the chain-head switch direction. Units are labels only; no conversion
/// is applied.
///
/// JSON schema:
///   {"name": str, "time_unit": str, "voltage_unit": str,
///    "scenarios": {"rise"|"fall": [{"p":num,"e":num,"m":num,
///                                   "a":num,"b":num}, ...]}}
struct CaseFile {
  std::string name;
  std::string time_unit = "ns";
  std::string voltage_unit = "V";
  std::vector<std::pair<Direction, std::vector<AttackerSpec>>> scenarios;
};

namespace detail {

inline double number_field(const nlohmann::json& rec, const char* key,
                           const std::string& path) {
  if (!rec.contains(key) || !rec[key].is_number()) {
    raise(errc::schema_error,
          "expected number at " + path + "." + key);
  }
  return rec[key].get<double>();
}

}  // namespace detail

inline CaseFile case_from_json(const nlohmann::json& doc,
                               const std::string& fallback_name) {
  if (!doc.is_object()) raise(errc::schema_error, "top level must be an object");

  CaseFile file;
  file.name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      raise(errc::schema_error, "expected string at name");
    file.name = doc["name"].get<std::string>();
  }
  if (doc.contains("time_unit")) {
    if (!doc["time_unit"].is_string())
      raise(errc::schema_error, "expected string at time_unit");
    file.time_unit = doc["time_unit"].get<std::string>();
  }
  if (doc.contains("voltage_unit")) {
    if (!doc["voltage_unit"].is_string())
      raise(errc::schema_error, "expected string at voltage_unit");
    file.voltage_unit = doc["voltage_unit"].get<std::string>();
  }

  if (!doc.contains("scenarios") || !doc["scenarios"].is_object())
    raise(errc::schema_error, "expected object at scenarios");
  const nlohmann::json& scenarios = doc["scenarios"];
  for (const auto& item : scenarios.items()) {
    if (item.key() != "rise" && item.key() != "fall") {
      raise(errc::schema_error,
            "unknown scenario key scenarios." + item.key());
    }
  }

  for (const char* key : {"rise", "fall"}) {
    if (!scenarios.contains(key)) continue;
    const nlohmann::json& list = scenarios[key];
    const std::string path = std::string("scenarios.") + key;
    if (!list.is_array()) raise(errc::schema_error, "expected array at " + path);
    std::vector<AttackerSpec> attackers;
    attackers.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string rec_path = path + "[" + std::to_string(i) + "]";
      if (!list[i].is_object())
        raise(errc::schema_error, "expected object at " + rec_path);
      const double p = detail::number_field(list[i], "p", rec_path);
      const double e = detail::number_field(list[i], "e", rec_path);
      const double m = detail::number_field(list[i], "m", rec_path);
      const double a = detail::number_field(list[i], "a", rec_path);
      const double b = detail::number_field(list[i], "b", rec_path);
      try {
        attackers.push_back(validate(p, e, m, a, b, static_cast<int>(i) + 1));
      } catch (const Error& err) {
        throw Error(errc::validation_error,
                    rec_path + ": " + err.what());
      }
    }
    const Direction dir =
        std::string(key) == "rise" ? Direction::rise : Direction::fall;
    file.scenarios.emplace_back(dir, std::move(attackers));
  }

  if (file.scenarios.empty())
    raise(errc::schema_error, "scenarios must contain rise and/or fall");
  return file;
}

inline CaseFile parse_case(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) ||
      std::filesystem::is_directory(path, ec)) {
    raise(errc::file_not_found, "no such case file: " + path.string());
  }
  std::ifstream in(path);
  if (!in) raise(errc::file_not_found, "cannot open: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    raise(errc::schema_error,
          path.string() + ": " + err.what());
  }
  return case_from_json(doc, path.stem().string());
}

inline nlohmann::ordered_json case_to_json(const CaseFile& file) {
  nlohmann::ordered_json doc;
  doc["name"] = file.name;
  doc["time_unit"] = file.time_unit;
  doc["voltage_unit"] = file.voltage_unit;
  doc["scenarios"] = nlohmann::ordered_json::object();
  for (const auto& [direction, attackers] : file.scenarios) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const AttackerSpec& att : attackers) {
      list.push_back({{"p", att.peak()},
                      {"e", att.end()},
                      {"m", att.magnitude()},
                      {"a", att.earliest()},
                      {"b", att.latest()}});
    }
    doc["scenarios"][direction_name(direction)] = std::move(list);
  }
  return doc;
}

inline void write_case(const CaseFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) raise(errc::file_not_found, "cannot write: " + path.string());
  out << case_to_json(file).dump(2) << "\n";
}

/// One analyzable chain per scenario; names carry the direction suffix.
inline std::vector<ChainCase> chain_cases(const CaseFile& file) {
  std::vector<ChainCase> chains;
  chains.reserve(file.scenarios.size());
  for (const auto& [direction, attackers] : file.scenarios) {
    ChainCase chain;
    chain.name = file.name + "/" + direction_name(direction);
    chain.direction = direction;
    chain.attackers = attackers;
    chains.push_back(std::move(chain));
  }
  return chains;
}

/// Wraps a generated chain as a single-scenario case file.
inline CaseFile case_file_from_chain(const ChainCase& chain) {
  CaseFile file;
  file.name = chain.name;
  file.scenarios.emplace_back(chain.direction, chain.attackers);
  return file;
}

}  // namespace frame

#endif  // FRAME_CASE_IO_HPP
