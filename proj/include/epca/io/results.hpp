#ifndef EPCA_IO_RESULTS_HPP
#define EPCA_IO_RESULTS_HPP

#include "epca/engine/epca.hpp"
#include "epca/engine/models.hpp"
#include "epca/io/csv.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace epca::io {

struct ScreeRow
{
    Index component;  // 1-based
    double eigenvalue;
    double ratio;
    double cumulative;
};

std::vector<ScreeRow> scree_rows(const Eigen::VectorXd& eigenvalues, const Eigen::VectorXd& ratios);

/// `component,eigenvalue,ratio,cumulative` with 17 significant digits.
std::string scree_csv(const std::vector<ScreeRow>& rows);

/// Parses a scree.csv written by scree_csv(). Throws ParseError.
std::vector<ScreeRow> read_scree_csv(const std::filesystem::path& path);

/// Bar chart of the leading (at most 20) explained-variance ratios.
std::string scree_svg(const std::vector<ScreeRow>& rows);

/// `sample,s1,...,sm`; a single zero row when the score matrix is empty.
std::string scores_csv(const Eigen::MatrixXd& scores);

/// Header and rows describing one manifold point. Shapes are written phase-normalized, one row per vertex.
std::string point_header(const sphere::UnitVector& p);
std::string point_header(const shape::PreShape& p);
std::vector<std::vector<double>> point_rows(const sphere::UnitVector& p);
std::vector<std::vector<double>> point_rows(const shape::PreShape& p);

std::string mean_csv(const sphere::UnitVector& p);
std::string mean_csv(const shape::PreShape& p);

/// `<key>,vertex?,coords...` rows, one block per point.
template <typename Point>
std::string point_series_csv(const std::string& key, const std::vector<double>& keys, const std::vector<Point>& points)
{
    std::string out = key + ",";
    const bool vertices = !points.empty() && point_rows(points.front()).size() > 1;
    if (vertices)
        out += "vertex,";
    out += points.empty() ? std::string("x") : point_header(points.front());
    out += '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto rows = point_rows(points[i]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out += format_double(keys[i]);
            if (vertices)
                out += "," + std::to_string(r);
            for (double v : rows[r])
                out += "," + format_double(v);
            out += '\n';
        }
    }
    return out;
}

struct WriteOptions
{
    std::vector<Index> curve_components;       // 0-based
    std::vector<Index> projection_components;  // 0-based
    std::size_t t_grid_size = 128;
};

struct WriteReport
{
    std::vector<std::string> files;
    std::vector<std::string> warnings;
};

/**
 * Writes scree.csv, scree.svg, mean.csv, scores.csv, pc_curve_<i>.csv and
 * projection_pc<i>.csv (i 1-based) under `dir`. Components whose eigenvalue is
 * tied are skipped with a warning. Throws IoError when `dir` is unwritable.
 */
template <EpcaModel M>
WriteReport write_results(const M& model,
                          const EpcaResult<M>& result,
                          const std::filesystem::path& dir,
                          const WriteOptions& options = {})
{
    ensure_directory(dir);
    WriteReport report;
    auto emit = [&](const std::string& name, const std::string& text) {
        write_text(dir / name, text);
        report.files.push_back(name);
    };
    const auto rows = scree_rows(result.eigenvalues, result.explained_ratio);
    emit("scree.csv", scree_csv(rows));
    emit("scree.svg", scree_svg(rows));
    emit("mean.csv", mean_csv(result.extrinsic_mean));
    emit("scores.csv", scores_csv(result.scores));

    const auto t_grid = default_t_grid(options.t_grid_size);
    for (Index c : options.curve_components) {
        const std::string name = "pc_curve_" + std::to_string(c + 1) + ".csv";
        try {
            const auto pts = principal_curve_points(model, result, c, t_grid);
            emit(name, point_series_csv("t", t_grid, pts));
        } catch (const MultiplicityError& e) {
            report.warnings.push_back(name + " skipped: " + e.what());
        } catch (const InputError& e) {
            report.warnings.push_back(name + " skipped: " + e.what());
        }
    }
    for (Index c : options.projection_components) {
        const std::string name = "projection_pc" + std::to_string(c + 1) + ".csv";
        try {
            const auto pts = project_sample_to_pc(model, result, c);
            std::vector<double> keys(pts.size());
            for (std::size_t i = 0; i < keys.size(); ++i)
                keys[i] = static_cast<double>(i + 1);
            emit(name, point_series_csv("sample", keys, pts));
        } catch (const MultiplicityError& e) {
            report.warnings.push_back(name + " skipped: " + e.what());
        } catch (const InputError& e) {
            report.warnings.push_back(name + " skipped: " + e.what());
        }
    }
    return report;
}

} // namespace epca::io

#endif
