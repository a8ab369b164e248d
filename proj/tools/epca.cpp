#include "epca/core/errors.hpp"
#include "epca/engine/epca.hpp"
#include "epca/engine/models.hpp"
#include "epca/io/contour_io.hpp"
#include "epca/io/csv.hpp"
#include "epca/io/results.hpp"
#include "epca/io/sphere_io.hpp"
#include "epca/io/synthetic.hpp"
#include "epca/oracle/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int
{
    kSuccess = 0,
    kInputError = 1,
    kDegenerate = 2,
    kVerifyFailed = 3,
};

int verbosity = 0;

void warn(const std::string& msg)
{
    std::cerr << "warning: " << msg << "\n";
}

void info(const std::string& msg)
{
    if (verbosity > 0)
        std::cerr << msg << "\n";
}

template <typename M>
void warn_about_spectrum(const epca::EpcaResult<M>& result)
{
    if (result.zero_spread)
        warn("single sample: the extrinsic covariance is zero and every eigenvalue is 0");
    else if (result.zero_variance)
        warn("zero total variance: explained ratios are reported as 0");
    const double tol = epca::default_multiplicity_tolerance(result.eigenvalues);
    for (const auto& g : epca::multiplicity_grouping(result.eigenvalues, tol)) {
        if (g.size() < 2 || result.zero_variance)
            continue;
        const std::string range = std::to_string(g.front() + 1) + ".." + std::to_string(g.back() + 1);
        if (std::abs(result.eigenvalues[g.front()]) <= tol)
            warn("eigenvalues " + range + " are numerically zero (the sample spans fewer dimensions)");
        else
            warn("eigenvalues " + range + " are tied; their principal curves are not unique");
    }
}

void print_scree_head(const Eigen::VectorXd& eigenvalues, const Eigen::VectorXd& ratios)
{
    double cumulative = 0.0;
    const epca::Index shown = std::min<epca::Index>(eigenvalues.size(), 5);
    std::cout << "component  eigenvalue  ratio  cumulative\n";
    for (epca::Index i = 0; i < shown; ++i) {
        cumulative += ratios[i];
        char buf[128];
        std::snprintf(buf, sizeof buf, "%9lld  %10.4g  %5.3f  %10.3f\n", static_cast<long long>(i + 1), eigenvalues[i],
                      ratios[i], cumulative);
        std::cout << buf;
    }
}

struct SphereDemoArgs
{
    std::size_t n = 300;
    std::vector<double> sigmas{0.18, 0.065};
    std::vector<double> mean;
    std::optional<std::uint64_t> seed;
    std::string input;
    std::string out = "sphere_out";
    std::size_t t_grid = 128;
};

int cmd_sphere_demo(const SphereDemoArgs& a)
{
    epca::sphere::SphereSample sample;
    if (!a.input.empty()) {
        sample = epca::io::read_sphere_csv(a.input);
    } else {
        if (!a.seed)
            throw epca::InputError("sphere-demo needs --seed unless --input is given");
        epca::io::SyntheticSphereConfig cfg;
        cfg.n = a.n;
        cfg.mean_direction = epca::io::default_sphere_mean();
        if (!a.mean.empty()) {
            cfg.mean_direction = Eigen::Map<const Eigen::VectorXd>(a.mean.data(), static_cast<epca::Index>(a.mean.size()));
            const double norm = cfg.mean_direction.norm();
            if (!(norm > 0.0))
                throw epca::InputError("--mean must be non-zero");
            cfg.mean_direction /= norm;
        }
        cfg.tangent_sigmas = a.sigmas;
        cfg.seed = *a.seed;
        sample = epca::io::gen_sphere_sample(cfg);
    }
    info("sphere sample: n = " + std::to_string(sample.size()));

    const epca::SphereModel model;
    const auto result = epca::run_epca(model, std::span<const epca::sphere::UnitVector>(sample));
    warn_about_spectrum(result);

    epca::io::WriteOptions opt;
    opt.t_grid_size = a.t_grid;
    for (epca::Index c = 0; c < std::min<epca::Index>(2, result.eigenvalues.size()); ++c)
        opt.curve_components.push_back(c);
    if (result.eigenvalues.size() > 0)
        opt.projection_components.push_back(0);
    const auto report = epca::io::write_results(model, result, a.out, opt);
    epca::io::write_text(std::filesystem::path(a.out) / "sample.csv", epca::io::sphere_csv(sample));
    for (const auto& w : report.warnings)
        warn(w);
    print_scree_head(result.eigenvalues, result.explained_ratio);
    return kSuccess;
}

struct ShapePcaArgs
{
    std::string input;
    std::size_t resample = 0;
    bool no_resample = false;
    std::string out = "shape_out";
    std::size_t t_grid = 9;
    std::size_t curves = 2;
};

int cmd_shape_pca(const ShapePcaArgs& a)
{
    epca::io::ReadOptions ropt;
    if (!a.no_resample) {
        std::size_t k = a.resample;
        if (k == 0)
            k = epca::io::declared_k_common(a.input);
        if (k == 0)
            k = epca::io::common_point_count(epca::io::read_contours(a.input).contours);
        if (k == 0)
            throw epca::InputError("contours have different point counts and the manifest declares no k_common; "
                                   "pass --resample K");
        ropt.resample = k;
    }
    const auto dataset = epca::io::read_contours(a.input, ropt);
    if (dataset.k_common == 0)
        throw epca::InputError("contours have different point counts; drop --no-resample or pass --resample K");
    info("dataset '" + dataset.name + "': n = " + std::to_string(dataset.contours.size()) +
         ", k = " + std::to_string(dataset.k_common));

    std::vector<epca::shape::PreShape> sample;
    sample.reserve(dataset.contours.size());
    for (const auto& c : dataset.contours)
        sample.push_back(epca::shape::to_preshape(c));

    const epca::ShapeModel model;
    const auto result = epca::run_epca(model, std::span<const epca::shape::PreShape>(sample));
    warn_about_spectrum(result);

    epca::io::WriteOptions opt;
    opt.t_grid_size = a.t_grid;
    for (epca::Index c = 0; c < std::min<epca::Index>(static_cast<epca::Index>(a.curves), result.eigenvalues.size()); ++c)
        opt.curve_components.push_back(c);
    const auto report = epca::io::write_results(model, result, a.out, opt);
    for (const auto& w : report.warnings)
        warn(w);
    print_scree_head(result.eigenvalues, result.explained_ratio);
    return kSuccess;
}

struct SimulateArgs
{
    std::size_t n = 16;
    std::size_t k = 500;
    double noise = 0.1;
    std::optional<std::uint64_t> seed;
    std::string out = "contours";
};

int cmd_simulate_contours(const SimulateArgs& a)
{
    if (!a.seed)
        throw epca::InputError("simulate-contours needs --seed");
    const auto templ = epca::io::butterfly_template(a.k);
    auto dataset = epca::io::gen_contour_sample(templ, a.n, a.noise, *a.seed);
    dataset.name = "butterfly_substitute";
    dataset.provenance["template"] = "butterfly_template(k)";
    epca::io::write_contours(dataset, a.out);
    info("wrote " + std::to_string(a.n) + " contours to " + a.out);
    return kSuccess;
}

int cmd_verify(const std::string& backend, std::uint64_t seed, bool inject_fault)
{
    epca::oracle::VerifyBackend b;
    if (backend == "sphere")
        b = epca::oracle::VerifyBackend::Sphere;
    else if (backend == "shape")
        b = epca::oracle::VerifyBackend::Shape;
    else
        throw epca::InputError("unknown backend '" + backend + "' (expected sphere or shape)");
    const auto rows = epca::oracle::run_verification(b, seed, inject_fault);
    bool ok = true;
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e <= %.1e", r.residual, r.tolerance);
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << buf << "]\n";
        if (!r.pass) {
            ok = false;
            std::cerr << "verification failed: " << r.name << " residual " << r.residual << "\n";
        }
    }
    return ok ? kSuccess : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Extrinsic PCA on the sphere and on planar shape space"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", verbosity, "Progress messages on stderr");

    SphereDemoArgs sphere_args;
    auto* sphere_cmd = app.add_subcommand("sphere-demo", "Simulate (or read) sphere data and run extrinsic PCA");
    sphere_cmd->add_option("--n", sphere_args.n, "Sample size")->check(CLI::PositiveNumber);
    sphere_cmd->add_option("--sigmas", sphere_args.sigmas, "Tangent standard deviations, comma separated")
        ->delimiter(',');
    sphere_cmd->add_option("--mean", sphere_args.mean, "Mean direction, comma separated")->delimiter(',');
    sphere_cmd->add_option("--seed", sphere_args.seed, "RNG seed");
    sphere_cmd->add_option("--input", sphere_args.input, "CSV of points (one per row) instead of simulating");
    sphere_cmd->add_option("--out", sphere_args.out, "Output directory");
    sphere_cmd->add_option("--t-grid", sphere_args.t_grid, "Points per principal curve")->check(CLI::PositiveNumber);

    ShapePcaArgs shape_args;
    auto* shape_cmd = app.add_subcommand("shape-pca", "Extrinsic PCA of planar contours (Veronese-Whitney)");
    shape_cmd->add_option("--input", shape_args.input, "Manifest JSON or single contour CSV")->required();
    auto* resample_opt =
        shape_cmd->add_option("--resample", shape_args.resample, "Arclength-resample every contour to K points");
    shape_cmd->add_flag("--no-resample", shape_args.no_resample, "Use the contours' points as given")
        ->excludes(resample_opt);
    shape_cmd->add_option("--out", shape_args.out, "Output directory");
    shape_cmd->add_option("--t-grid", shape_args.t_grid, "Points per principal curve")->check(CLI::PositiveNumber);
    shape_cmd->add_option("--curves", shape_args.curves, "Number of principal curves to write");

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate-contours", "Generate a synthetic butterfly-like contour dataset");
    sim_cmd->add_option("--n", sim_args.n, "Number of contours")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--k", sim_args.k, "Points per contour")->check(CLI::Range(3, 1000000));
    sim_cmd->add_option("--noise", sim_args.noise, "Radial noise level relative to the RMS radius")
        ->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--seed", sim_args.seed, "RNG seed")->required();
    sim_cmd->add_option("--out", sim_args.out, "Output directory");

    std::string verify_backend = "sphere";
    std::uint64_t verify_seed = 1;
    bool inject_fault = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute-force oracles");
    verify_cmd->add_option("--backend", verify_backend, "sphere or shape")
        ->check(CLI::IsMember({"sphere", "shape"}));
    verify_cmd->add_option("--seed", verify_seed, "RNG seed");
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*sphere_cmd)
            return cmd_sphere_demo(sphere_args);
        if (*shape_cmd)
            return cmd_shape_pca(shape_args);
        if (*sim_cmd)
            return cmd_simulate_contours(sim_args);
        if (*verify_cmd)
            return cmd_verify(verify_backend, verify_seed, inject_fault);
    } catch (const epca::FocalPointError& e) {
        std::cerr << "error: FocalPoint: " << e.what() << "\n";
        return kDegenerate;
    } catch (const epca::MultiplicityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const epca::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
