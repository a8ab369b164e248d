#ifndef EPCA_IO_CONTOUR_IO_HPP
#define EPCA_IO_CONTOUR_IO_HPP

#include "epca/shape/contour.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace epca::io {

/// n contours plus the manifest they came from.
struct ContourDataset
{
    std::string name;
    std::vector<std::string> files;
    std::vector<shape::Contour> contours;
    std::size_t k_common = 0;  // 0 when contours have differing point counts
    nlohmann::json provenance = nlohmann::json::object();
};

enum class ContourFormat
{
    Auto,    // `x,y` header -> point list; two numeric rows -> 2 x K matrix
    Points,  // one `x,y` point per row, header optional
    Matrix,  // two rows: x coordinates, then y coordinates
};

struct ReadOptions
{
    ContourFormat format = ContourFormat::Auto;
    /// Resample every contour to this many arclength-uniform points.
    std::optional<std::size_t> resample;
};

/**
 * Parses one contour file. Orientation is normalized to counterclockwise with
 * vertex 0 kept as the starting landmark. Throws ParseError with the 1-based
 * line number on malformed rows, non-numeric fields, fewer than 3 points or
 * coincident consecutive points; IoError when the file cannot be opened.
 */
shape::Contour read_contour_file(const std::filesystem::path& path, ContourFormat format = ContourFormat::Auto);

/**
 * Reads a dataset: either a JSON manifest {name, files[], k_common, provenance}
 * (file paths relative to the manifest) or a single contour file.
 */
ContourDataset read_contours(const std::filesystem::path& path, const ReadOptions& options = {});

/// k_common declared by a manifest, or 0 for single files and manifests without one.
std::size_t declared_k_common(const std::filesystem::path& path);

/// Writes contour_NN.csv files (header `x,y`, 17 significant digits) and manifest.json.
void write_contours(const ContourDataset& dataset, const std::filesystem::path& dir);

std::string contour_csv(const shape::Contour& c);

/// Common point count, or 0 when counts differ.
std::size_t common_point_count(const std::vector<shape::Contour>& contours);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace epca::io

#endif
