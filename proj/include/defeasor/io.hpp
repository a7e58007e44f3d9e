#pragma once

#include <filesystem>
#include <string>

namespace defeasor {

/// Whole-file read. Throws InputError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace defeasor
