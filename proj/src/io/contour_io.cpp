#include "epca/io/contour_io.hpp"

#include "epca/core/errors.hpp"
#include "epca/io/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace epca::io {

namespace {

struct Line
{
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(const std::string& text)
{
    std::vector<Line> out;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        const std::string_view line = trim(std::string_view(text).substr(start, end - start));
        if (!line.empty())
            out.push_back(Line{number, line});
        start = end + 1;
        ++number;
    }
    return out;
}

bool is_xy_header(std::string_view line)
{
    const auto fields = split_fields(line);
    if (fields.size() != 2)
        return false;
    auto lower = [](std::string_view s) {
        std::string out(trim(s));
        for (char& c : out)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    return lower(fields[0]) == "x" && lower(fields[1]) == "y";
}

std::vector<double> numeric_row(const std::string& file, const Line& line)
{
    std::vector<double> out;
    for (std::string_view field : split_fields(line.text)) {
        double v = 0.0;
        if (!parse_double(field, v))
            throw ParseError(file, line.number, "non-numeric field '" + std::string(trim(field)) + "'");
        if (!std::isfinite(v))
            throw ParseError(file, line.number, "non-finite value");
        out.push_back(v);
    }
    return out;
}

struct ParsedPoints
{
    std::vector<shape::Point2> points;
    std::vector<std::size_t> lines;  // source line of each point
    std::size_t last_line = 1;
};

ParsedPoints parse_point_rows(const std::string& file, const std::vector<Line>& lines, std::size_t first)
{
    ParsedPoints out;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto row = numeric_row(file, lines[i]);
        if (row.size() != 2)
            throw ParseError(file, lines[i].number, "expected 2 fields (x,y), found " + std::to_string(row.size()));
        out.points.emplace_back(row[0], row[1]);
        out.lines.push_back(lines[i].number);
    }
    return out;
}

ParsedPoints parse_matrix_rows(const std::string& file, const std::vector<Line>& lines)
{
    if (lines.size() != 2)
        throw ParseError(file, lines.empty() ? 1 : lines.back().number,
                         "matrix layout needs exactly 2 rows, found " + std::to_string(lines.size()));
    const auto xs = numeric_row(file, lines[0]);
    const auto ys = numeric_row(file, lines[1]);
    if (xs.size() != ys.size())
        throw ParseError(file, lines[1].number, "row lengths differ (" + std::to_string(xs.size()) + " vs " +
                                                    std::to_string(ys.size()) + ")");
    ParsedPoints out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.points.emplace_back(xs[i], ys[i]);
        out.lines.push_back(lines[1].number);
    }
    return out;
}

} // namespace

shape::Contour read_contour_file(const std::filesystem::path& path, ContourFormat format)
{
    const std::string file = path.string();
    const std::string text = read_text(path);
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(file, 1, "empty contour file");

    const bool header = is_xy_header(lines.front().text);
    if (format == ContourFormat::Auto) {
        if (header)
            format = ContourFormat::Points;
        else if (lines.size() == 2 && split_fields(lines[0].text).size() > 2)
            format = ContourFormat::Matrix;
        else
            format = ContourFormat::Points;
    }

    ParsedPoints parsed = format == ContourFormat::Matrix ? parse_matrix_rows(file, lines)
                                                          : parse_point_rows(file, lines, header ? 1 : 0);
    const std::size_t last_line = lines.back().number;
    const std::size_t k = parsed.points.size();
    if (k < 3)
        throw ParseError(file, last_line, "contour has " + std::to_string(k) + " points; at least 3 are required");
    for (std::size_t i = 0; i < k; ++i) {
        if (parsed.points[i] == parsed.points[(i + 1) % k])
            throw ParseError(file, parsed.lines[(i + 1) % k], "coincident consecutive points");
    }
    const shape::Contour c(std::move(parsed.points));
    if (shape::signed_area(c) == 0.0)
        throw ParseError(file, last_line, "contour encloses zero area");
    return shape::normalize_orientation(c);
}

std::size_t common_point_count(const std::vector<shape::Contour>& contours)
{
    if (contours.empty())
        return 0;
    const std::size_t k = contours.front().size();
    for (const auto& c : contours) {
        if (c.size() != k)
            return 0;
    }
    return k;
}

ContourDataset read_contours(const std::filesystem::path& path, const ReadOptions& options)
{
    ContourDataset out;
    if (path.extension() == ".json") {
        const std::string text = read_text(path);
        nlohmann::json manifest;
        try {
            manifest = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path.string(), 1, std::string("invalid manifest JSON: ") + e.what());
        }
        if (!manifest.is_object() || !manifest.contains("files") || !manifest["files"].is_array())
            throw ParseError(path.string(), 1, "manifest needs a 'files' array");
        out.name = manifest.value("name", path.stem().string());
        if (manifest.contains("provenance"))
            out.provenance = manifest["provenance"];
        const auto base = path.parent_path();
        for (const auto& f : manifest["files"]) {
            if (!f.is_string())
                throw ParseError(path.string(), 1, "manifest 'files' entries must be strings");
            const std::string name = f.get<std::string>();
            out.files.push_back(name);
            out.contours.push_back(read_contour_file(base / name, options.format));
        }
        if (out.contours.empty())
            throw ParseError(path.string(), 1, "manifest lists no contour files");
    } else {
        out.name = path.stem().string();
        out.files.push_back(path.filename().string());
        out.contours.push_back(read_contour_file(path, options.format));
    }

    if (options.resample) {
        if (*options.resample < 3)
            throw InputError("resample count must be at least 3");
        for (auto& c : out.contours)
            c = shape::resample_arclength(c, *options.resample);
    }
    out.k_common = common_point_count(out.contours);
    return out;
}

std::size_t declared_k_common(const std::filesystem::path& path)
{
    if (path.extension() != ".json")
        return 0;
    try {
        const auto manifest = nlohmann::json::parse(read_text(path));
        if (manifest.is_object() && manifest.contains("k_common") && manifest["k_common"].is_number_unsigned())
            return manifest["k_common"].get<std::size_t>();
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string(), 1, std::string("invalid manifest JSON: ") + e.what());
    }
    return 0;
}

std::string contour_csv(const shape::Contour& c)
{
    std::string out = "x,y\n";
    for (const auto& p : c.points()) {
        out += format_double(p.x());
        out += ',';
        out += format_double(p.y());
        out += '\n';
    }
    return out;
}

void write_contours(const ContourDataset& dataset, const std::filesystem::path& dir)
{
    ensure_directory(dir);
    nlohmann::json manifest;
    manifest["name"] = dataset.name;
    std::vector<std::string> files;
    for (std::size_t i = 0; i < dataset.contours.size(); ++i) {
        std::string name;
        if (i < dataset.files.size() && !dataset.files[i].empty()) {
            name = std::filesystem::path(dataset.files[i]).filename().string();
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "contour_%02zu.csv", i);
            name = buf;
        }
        write_text(dir / name, contour_csv(dataset.contours[i]));
        files.push_back(name);
    }
    manifest["files"] = files;
    manifest["k_common"] = dataset.k_common;
    manifest["provenance"] = dataset.provenance;
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t seed)
{
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace epca::io
