#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsa {

/// Writes through a sibling temporary file and renames it into place, so
/// readers never observe a partial file. Throws Error(kIo).
void write_file_atomic(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer);

/// Lines of a text stream, without terminators; a trailing newline does not
/// start an extra empty line and `\r\n` endings are accepted.
std::vector<std::string> read_lines(std::istream& in);

}  // namespace tsa
