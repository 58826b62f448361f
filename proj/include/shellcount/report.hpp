#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shellcount::report {

inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CrossCheck {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
  std::uint64_t cases = 0;

  friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

struct InputSummary {
  int vertices = 0;
  int edges = 0;
  std::string graph_class;
  std::map<std::string, std::string> params;

  friend bool operator==(const InputSummary&, const InputSummary&) = default;
};

/// Result record of one CLI command. Big integers are decimal strings;
/// result values are strings, booleans or arrays of strings.
struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  InputSummary input;
  std::map<std::string, nlohmann::json> results;
  std::vector<CrossCheck> cross_checks;
  std::map<std::string, double> timing_ms;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const CrossCheck& c);
void from_json(const nlohmann::json& j, CrossCheck& c);
void to_json(nlohmann::json& j, const InputSummary& s);
void from_json(const nlohmann::json& j, InputSummary& s);
void to_json(nlohmann::json& j, const Report& r);
/// Throws nlohmann::json::exception on schema violations.
void from_json(const nlohmann::json& j, Report& r);

/// Plain-text table of results and checks.
std::string render_table(const Report& r);

}  // namespace shellcount::report
