#include "epca/io/sphere_io.hpp"

#include "epca/core/errors.hpp"
#include "epca/io/csv.hpp"
#include "epca/io/results.hpp"

#include <cmath>

namespace epca::io {

sphere::SphereSample read_sphere_csv(const std::filesystem::path& path)
{
    const std::string file = path.string();
    const std::string text = read_text(path);
    sphere::SphereSample out;
    std::size_t start = 0;
    std::size_t line = 0;
    std::size_t width = 0;
    bool first_content = true;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        ++line;
        const std::string_view row = trim(std::string_view(text).substr(start, end - start));
        start = end + 1;
        if (row.empty())
            continue;
        const auto fields = split_fields(row);
        AmbientVector v(static_cast<Index>(fields.size()));
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size() && numeric; ++i)
            numeric = parse_double(fields[i], v[static_cast<Index>(i)]);
        if (!numeric) {
            if (first_content) {
                first_content = false;
                continue;
            }
            throw ParseError(file, line, "non-numeric field");
        }
        first_content = false;
        if (fields.size() < 2)
            throw ParseError(file, line, "a sphere point needs at least 2 coordinates");
        if (width == 0)
            width = fields.size();
        else if (fields.size() != width)
            throw ParseError(file, line, "expected " + std::to_string(width) + " fields, found " +
                                             std::to_string(fields.size()));
        const double norm = v.norm();
        if (!std::isfinite(norm) || norm == 0.0)
            throw ParseError(file, line, "point must be finite and non-zero");
        out.emplace_back(AmbientVector(v / norm));
    }
    if (out.empty())
        throw ParseError(file, std::max<std::size_t>(line, 1), "no points");
    return out;
}

std::string sphere_csv(const sphere::SphereSample& sample)
{
    if (sample.empty())
        return "x1\n";
    std::string out = point_header(sample.front()) + "\n";
    for (const auto& p : sample) {
        for (Index i = 0; i < p.ambient_dim(); ++i)
            out += (i ? "," : "") + format_double(p[i]);
        out += '\n';
    }
    return out;
}

} // namespace epca::io
