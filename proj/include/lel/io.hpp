#pragma once

#include <string>

#include <lel/error.hpp>

namespace lel {

// Reads and parses a JSON file; missing files and malformed JSON raise
// ParseError with the path in the detail.
Json read_json_file(const std::string& path);

}  // namespace lel
