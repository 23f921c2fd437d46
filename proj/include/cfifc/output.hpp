#pragma once

#include <filesystem>
#include <string_view>

namespace cfifc {

// Writes content to a sibling temporary file and renames it over path, so
// readers never observe a partially written file. Throws error(io_error).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace cfifc
