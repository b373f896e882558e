#include "dispatch.hpp"
#include "run_config.hpp"
#include "symbol_lang.hpp"

#include "CLI11.hpp"

#include <Eigen/Core>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

struct Overrides {
    std::string config_path;
    std::string out_dir;
    std::string symbol;
    int n = -1;
    double p = -1.0, alpha = -1.0;
    std::string scheme;
    int grid_size = -1, grid_angular = -1;
    double grid_split_s = -1.0, grid_extent = -1.0;
    int N = -1;
    std::vector<double> t_values;
    double r_first = -1.0, r_last = -1.0;
    int schedule_count = -1;
    double window_radius = -1.0;
    double cluster_tol = -1.0, vo_threshold = -1.0, margin = -1.0, delta = -1.0;
    double lambda_re = 0.0, lambda_im = 0.0;
    bool lambda_set = false;
    double proj_norm = -1.0;
    int angular_samples = -1;
    std::string band_operator;
    double osc_r = -1.0;
    int osc_samples = -1;
    std::vector<double> osc_magnitudes;
    std::vector<double> vmo_radii;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "JSON configuration file");
    cmd->add_option("--out", o.out_dir, "output directory for reports");
    cmd->add_option("--symbol", o.symbol, "symbol in the mini-language");
    cmd->add_option("--n", o.n, "complex dimension");
    cmd->add_option("--p", o.p, "integrability exponent in (1, inf)");
    cmd->add_option("--alpha", o.alpha, "Gaussian weight parameter");
    cmd->add_option("--scheme", o.scheme, "grid scheme: hermite-tensor | polar | uniform");
    cmd->add_option("--grid-size", o.grid_size, "per-axis / radial node count");
    cmd->add_option("--grid-angular", o.grid_angular, "polar: angular node count");
    cmd->add_option("--grid-split-s", o.grid_split_s, "polar: radial split point");
    cmd->add_option("--grid-extent", o.grid_extent, "uniform: disk radius");
    cmd->add_option("--N", o.N, "basis truncation degree");
    cmd->add_option("--t", o.t_values, "band profile scales, strictly decreasing in (0,1]");
    cmd->add_option("--r-first", o.r_first, "escape schedule: first radius");
    cmd->add_option("--r-last", o.r_last, "escape schedule: last radius");
    cmd->add_option("--schedule-count", o.schedule_count, "escape schedule: shell count");
    cmd->add_option("--window-radius", o.window_radius, "escape schedule: window radius");
    cmd->add_option("--cluster-tol", o.cluster_tol, "point clustering tolerance");
    cmd->add_option("--vo-threshold", o.vo_threshold, "oscillation decay threshold");
    cmd->add_option("--margin", o.margin, "fredholm margin (0 = automatic)");
    cmd->add_option("--delta", o.delta, "eigenvalue clustering radius");
    cmd->add_option("--lambda-re", o.lambda_re, "fredholm test point, real part")
        ->each([&o](const std::string&) { o.lambda_set = true; });
    cmd->add_option("--lambda-im", o.lambda_im, "fredholm test point, imaginary part")
        ->each([&o](const std::string&) { o.lambda_set = true; });
    cmd->add_option("--proj-norm", o.proj_norm, "projection norm bound for p != 2");
    cmd->add_option("--angular-samples", o.angular_samples, "directions per shell");
    cmd->add_option("--operator", o.band_operator,
                    "band-profile operator: projection | multiplication");
    cmd->add_option("--osc-r", o.osc_r, "oscillation ball radius");
    cmd->add_option("--osc-samples", o.osc_samples, "oscillation ball samples");
    cmd->add_option("--osc-magnitudes", o.osc_magnitudes, "oscillation base-point magnitudes");
    cmd->add_option("--vmo-radii", o.vmo_radii, "shells for the Berezin route");
}

fockcli::RunConfig build_config(const Overrides& o) {
    fockcli::RunConfig c;
    if (!o.config_path.empty()) c = fockcli::load_config(o.config_path);
    if (!o.out_dir.empty()) c.out_dir = o.out_dir;
    if (!o.symbol.empty()) c.symbol = o.symbol;
    if (o.n > 0 || o.p > 0.0 || o.alpha > 0.0)
        c.params = fock::FockParams(o.n > 0 ? o.n : c.params.n, o.p > 0.0 ? o.p : c.params.p,
                                    o.alpha > 0.0 ? o.alpha : c.params.alpha);
    if (!o.scheme.empty()) c.scheme = fock::scheme_from_name(o.scheme);
    if (o.grid_size > 0) c.grid_size = o.grid_size;
    if (o.grid_angular >= 0) c.grid_opts.angular = o.grid_angular;
    if (o.grid_split_s > 0.0) c.grid_opts.split_s = o.grid_split_s;
    if (o.grid_extent > 0.0) c.grid_opts.extent = o.grid_extent;
    if (o.N >= 0) c.N = o.N;
    if (!o.t_values.empty()) c.t_values = o.t_values;
    if (o.r_first > 0.0) c.r_first = o.r_first;
    if (o.r_last > 0.0) c.r_last = o.r_last;
    if (o.schedule_count > 0) c.schedule_count = o.schedule_count;
    if (o.window_radius > 0.0) c.window_radius = o.window_radius;
    if (o.cluster_tol > 0.0) c.cluster_tol = o.cluster_tol;
    if (o.vo_threshold > 0.0) c.vo_threshold = o.vo_threshold;
    if (o.margin >= 0.0) c.margin = o.margin;
    if (o.delta > 0.0) c.delta = o.delta;
    if (o.lambda_set) c.lambda = fock::Complex(o.lambda_re, o.lambda_im);
    if (o.proj_norm >= 0.0) c.proj_norm = o.proj_norm;
    if (o.angular_samples > 0) c.angular_samples = o.angular_samples;
    if (!o.band_operator.empty()) c.band_operator = o.band_operator;
    if (o.osc_r > 0.0) c.osc_r = o.osc_r;
    if (o.osc_samples > 0) c.osc_samples = o.osc_samples;
    if (!o.osc_magnitudes.empty()) c.osc_magnitudes = o.osc_magnitudes;
    if (!o.vmo_radii.empty()) c.vmo_radii = o.vmo_radii;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("FOCK_NUM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) Eigen::setNbThreads(t);
    }

    CLI::App app{"Fock-space Toeplitz operator toolkit"};
    app.require_subcommand(1);
    Overrides o;
    const char* commands[] = {"assemble", "ess-spec", "ess-norm",   "fredholm",
                              "band-profile", "osc",      "vmo",        "verify"};
    for (const char* name : commands) add_common_options(app.add_subcommand(name), o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return fockcli::dispatch(command, build_config(o));
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
