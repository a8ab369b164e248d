#ifndef EPCA_IO_CSV_HPP
#define EPCA_IO_CSV_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace epca::io {

/// Shortest-form-independent rendering with 17 significant digits ("%.17g", locale-free).
std::string format_double(double v);

/// Parses a full field as a double; returns false on any trailing garbage.
bool parse_double(std::string_view field, double& out);

std::vector<std::string_view> split_fields(std::string_view line, char sep = ',');

std::string_view trim(std::string_view s);

/// Writes `text` to `path` in binary mode (LF line endings). Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Creates `dir` (and parents). Throws IoError when it is not a writable directory.
void ensure_directory(const std::filesystem::path& dir);

std::string read_text(const std::filesystem::path& path);

} // namespace epca::io

#endif
