#include "shellcount/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shellcount::report {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

bool Report::all_passed() const {
  return std::none_of(cross_checks.begin(), cross_checks.end(),
                      [](const CrossCheck& c) { return c.status == Status::Fail; });
}

void to_json(json& j, const CrossCheck& c) {
  j = json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"cases", c.cases}};
}

void from_json(const json& j, CrossCheck& c) {
  j.at("name").get_to(c.name);
  c.status = status_from_string(j.at("status").get<std::string>());
  j.at("detail").get_to(c.detail);
  j.at("cases").get_to(c.cases);
}

void to_json(json& j, const InputSummary& s) {
  j = json{{"n", s.vertices}, {"edges", s.edges}, {"class", s.graph_class}, {"params", s.params}};
}

void from_json(const json& j, InputSummary& s) {
  j.at("n").get_to(s.vertices);
  j.at("edges").get_to(s.edges);
  j.at("class").get_to(s.graph_class);
  j.at("params").get_to(s.params);
}

void to_json(json& j, const Report& r) {
  j = json{{"schemaVersion", r.schema_version},
           {"command", r.command},
           {"input", r.input},
           {"results", r.results},
           {"crossChecks", r.cross_checks},
           {"timing", r.timing_ms}};
}

void from_json(const json& j, Report& r) {
  j.at("schemaVersion").get_to(r.schema_version);
  if (r.schema_version != kSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
  }
  j.at("command").get_to(r.command);
  j.at("input").get_to(r.input);
  r.results.clear();
  for (const auto& [key, value] : j.at("results").items()) r.results[key] = value;
  j.at("crossChecks").get_to(r.cross_checks);
  j.at("timing").get_to(r.timing_ms);
}

std::string render_table(const Report& r) {
  std::ostringstream out;
  out << r.command;
  if (!r.input.graph_class.empty()) {
    out << "  [" << r.input.graph_class << ", n=" << r.input.vertices << ", |E|=" << r.input.edges << "]";
  }
  out << '\n';
  std::size_t width = 0;
  for (const auto& [key, value] : r.results) width = std::max(width, key.size());
  for (const auto& [key, value] : r.results) {
    out << "  " << key << std::string(width - key.size() + 2, ' ');
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& c : r.cross_checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (c.cases) out << " (" << c.cases << " cases)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace shellcount::report
