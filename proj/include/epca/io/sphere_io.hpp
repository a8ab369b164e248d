#ifndef EPCA_IO_SPHERE_IO_HPP
#define EPCA_IO_SPHERE_IO_HPP

#include "epca/sphere/sphere.hpp"

#include <filesystem>
#include <string>

namespace epca::io {

/**
 * One point per row (optional non-numeric header row). Rows are radially
 * projected onto the unit sphere. Throws ParseError for ragged or
 * non-numeric rows, zero rows, fewer than 2 columns or an empty file.
 */
sphere::SphereSample read_sphere_csv(const std::filesystem::path& path);

/// Header x1..xN, one point per row.
std::string sphere_csv(const sphere::SphereSample& sample);

} // namespace epca::io

#endif
