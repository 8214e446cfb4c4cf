#include <lel/report.hpp>

namespace lel {

Json Report::to_json() const {
  Json j;
  j["subject"] = subject;
  if (!meta.is_null()) j["meta"] = meta;
  j["pass"] = pass();
  j["summary"] = summary;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["id"] = c.id;
    cj["pass"] = c.pass;
    if (!c.pass) {
      cj["violations"] = c.violation_count;
      cj["witnesses"] = c.witnesses;
    }
    if (!c.info.is_null()) cj["info"] = c.info;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j;
}

}  // namespace lel
