#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <lel/error.hpp>

namespace lel {

// One named verdict inside an audit report.  `witnesses` is a JSON array of
// witness objects (element labels, never indices); it is capped so reports on
// badly broken inputs stay readable, with the full count kept alongside.
struct Check {
  std::string id;
  bool pass = true;
  Json witnesses = Json::array();
  std::size_t violation_count = 0;
  Json info;  // e.g. {"tested": N} for conditional laws; null when unused

  static constexpr std::size_t kMaxWitnesses = 20;

  void fail(Json witness) {
    pass = false;
    ++violation_count;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
};

struct Report {
  std::string subject;
  std::string summary;  // one-line overall classification
  Json meta;            // identification: input name, size, options
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Check* find(std::string_view id) {
    for (auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
  const Check* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  Check& add(std::string id) {
    Check c;
    c.id = std::move(id);
    checks.push_back(std::move(c));
    return checks.back();
  }

  // Append every check of `other` (re-using its ids) to this report.
  void absorb(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }

  Json to_json() const;
};

}  // namespace lel
