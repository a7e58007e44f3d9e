#include "defeasor/io.hpp"

#include <fstream>
#include <sstream>

#include "defeasor/errors.hpp"

namespace defeasor {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace defeasor
