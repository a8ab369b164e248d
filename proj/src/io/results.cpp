#include "epca/io/results.hpp"

#include "epca/core/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace epca::io {

std::vector<ScreeRow> scree_rows(const Eigen::VectorXd& eigenvalues, const Eigen::VectorXd& ratios)
{
    if (eigenvalues.size() != ratios.size())
        throw InputError("scree_rows: eigenvalue and ratio counts differ");
    std::vector<ScreeRow> out;
    double cumulative = 0.0;
    for (Index i = 0; i < eigenvalues.size(); ++i) {
        cumulative += ratios[i];
        out.push_back(ScreeRow{i + 1, eigenvalues[i], ratios[i], cumulative});
    }
    return out;
}

std::string scree_csv(const std::vector<ScreeRow>& rows)
{
    std::string out = "component,eigenvalue,ratio,cumulative\n";
    for (const auto& r : rows) {
        out += std::to_string(r.component) + "," + format_double(r.eigenvalue) + "," + format_double(r.ratio) + "," +
               format_double(r.cumulative) + "\n";
    }
    return out;
}

std::vector<ScreeRow> read_scree_csv(const std::filesystem::path& path)
{
    const std::string text = read_text(path);
    std::vector<ScreeRow> out;
    std::size_t start = 0;
    std::size_t line = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        ++line;
        const std::string_view row = trim(std::string_view(text).substr(start, end - start));
        start = end + 1;
        if (line == 1 || row.empty())
            continue;
        const auto fields = split_fields(row);
        double v[4];
        if (fields.size() != 4)
            throw ParseError(path.string(), line, "expected 4 fields");
        for (int i = 0; i < 4; ++i) {
            if (!parse_double(fields[static_cast<std::size_t>(i)], v[i]))
                throw ParseError(path.string(), line, "non-numeric field");
        }
        out.push_back(ScreeRow{static_cast<Index>(v[0]), v[1], v[2], v[3]});
    }
    return out;
}

std::string scree_svg(const std::vector<ScreeRow>& rows)
{
    const std::size_t bars = std::min<std::size_t>(rows.size(), 20);
    const int width = 640;
    const int height = 360;
    const int left = 60;
    const int bottom = 40;
    const int top = 30;
    const double plot_w = width - left - 20;
    const double plot_h = height - top - bottom;
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"320\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
           "Explained variance ratio</text>\n";
    std::snprintf(buf, sizeof buf, "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", left,
                  height - bottom, width - 20, height - bottom);
    out += buf;
    std::snprintf(buf, sizeof buf, "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", left, top,
                  left, height - bottom);
    out += buf;
    for (int tick = 0; tick <= 4; ++tick) {
        const double y = height - bottom - plot_h * tick / 4.0;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%d\" y=\"%.1f\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">%.2f</text>\n",
                      left - 6, y + 3.0, tick / 4.0);
        out += buf;
    }
    if (bars > 0) {
        const double slot = plot_w / static_cast<double>(bars);
        for (std::size_t i = 0; i < bars; ++i) {
            const double ratio = std::clamp(rows[i].ratio, 0.0, 1.0);
            const double h = plot_h * ratio;
            const double x = left + slot * static_cast<double>(i) + slot * 0.1;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"steelblue\"/>\n", x,
                          height - bottom - h, slot * 0.8, h);
            out += buf;
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.1f\" y=\"%d\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">%lld</text>\n",
                          x + slot * 0.4, height - bottom + 14, static_cast<long long>(rows[i].component));
            out += buf;
        }
    }
    out += "</svg>\n";
    return out;
}

std::string scores_csv(const Eigen::MatrixXd& scores)
{
    if (scores.rows() == 0 || scores.cols() == 0)
        return "sample,s1\n1,0\n";
    std::string out = "sample";
    for (Index j = 0; j < scores.cols(); ++j)
        out += ",s" + std::to_string(j + 1);
    out += '\n';
    for (Index i = 0; i < scores.rows(); ++i) {
        out += std::to_string(i + 1);
        for (Index j = 0; j < scores.cols(); ++j)
            out += "," + format_double(scores(i, j));
        out += '\n';
    }
    return out;
}

std::string point_header(const sphere::UnitVector& p)
{
    std::string out;
    for (Index i = 0; i < p.ambient_dim(); ++i)
        out += (i ? ",x" : "x") + std::to_string(i + 1);
    return out;
}

std::string point_header(const shape::PreShape&)
{
    return "x,y";
}

std::vector<std::vector<double>> point_rows(const sphere::UnitVector& p)
{
    return {std::vector<double>(p.coords().data(), p.coords().data() + p.ambient_dim())};
}

std::vector<std::vector<double>> point_rows(const shape::PreShape& p)
{
    const shape::PreShape q = shape::phase_normalized(p);
    std::vector<std::vector<double>> out;
    for (Index j = 0; j < q.k(); ++j)
        out.push_back({q.z()[j].real(), q.z()[j].imag()});
    return out;
}

namespace {
template <typename Point>
std::string mean_csv_impl(const Point& p)
{
    std::string out = point_header(p) + "\n";
    for (const auto& row : point_rows(p)) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + format_double(row[i]);
        out += '\n';
    }
    return out;
}
} // namespace

std::string mean_csv(const sphere::UnitVector& p)
{
    return mean_csv_impl(p);
}

std::string mean_csv(const shape::PreShape& p)
{
    return mean_csv_impl(p);
}

} // namespace epca::io
