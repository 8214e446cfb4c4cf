#include <lel/io.hpp>

#include <fstream>

namespace lel {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::ParseError, "cannot open file", Json{{"path", path}});
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw Error(Errc::ParseError, "file is not valid JSON", Json{{"path", path}});
  return j;
}

}  // namespace lel
