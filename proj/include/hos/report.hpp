#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace hos {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of a verification run: named checks plus free-form witnesses.
/// Serializes as {command, checks: [{name, pass, detail}], witnesses: [...]}.
struct Report {
  std::string command;
  std::vector<Check> checks;
  Json witnesses = Json::array();

  bool add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  }

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
    for (const auto& w : other.witnesses) witnesses.push_back(w);
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"command", command}, {"checks", cs}, {"witnesses", witnesses}};
  }

  std::string to_text() const {
    std::string s;
    for (const auto& c : checks) {
      s += c.pass ? "[pass] " : "[FAIL] ";
      s += c.name;
      if (!c.detail.empty()) s += ": " + c.detail;
      s += '\n';
    }
    return s;
  }
};

}  // namespace hos
