#pragma once

#include <string>

namespace lel::testing {

inline std::string data_file(const std::string& name) {
  return std::string(LEL_DATA_DIR) + "/" + name;
}

inline std::string fixture_file(const std::string& name) {
  return std::string(LEL_FIXTURE_DIR) + "/" + name;
}

}  // namespace lel::testing
