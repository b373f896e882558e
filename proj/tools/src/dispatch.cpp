#include "dispatch.hpp"

#include "symbol_lang.hpp"

#include "fock/band.hpp"
#include "fock/battery.hpp"
#include "fock/operators.hpp"
#include "fock/oscillation.hpp"
#include "fock/serialize.hpp"
#include "fock/spectra.hpp"

#include <cstdio>
#include <filesystem>
#include <vector>

namespace fockcli {

using fock::Json;

namespace {

std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void write_report(const RunConfig& c, const std::string& command, const Json& result,
                  const std::vector<std::string>& files) {
    Json report;
    report["command"] = command;
    report["config"] = to_json(c);
    report["result"] = result;
    report["files"] = files;
    fock::write_text(join(c.out_dir, command + ".json"), fock::dump_json(report));
}

std::string vo_name(fock::VoVerdict v) {
    switch (v) {
        case fock::VoVerdict::Vo: return "vo";
        case fock::VoVerdict::NotVo: return "not_vo";
        case fock::VoVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string fredholm_name(fock::FredholmVerdict v) {
    switch (v) {
        case fock::FredholmVerdict::Fredholm: return "fredholm";
        case fock::FredholmVerdict::NotFredholm: return "not_fredholm";
        case fock::FredholmVerdict::Uncertain: return "uncertain";
    }
    return "?";
}

int cmd_assemble(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::QuadratureGrid grid = c.make_grid_nu(c.params.alpha);
    fock::BasisMatrix T = fock::assemble_toeplitz(f, c.N, c.params, grid);
    std::string csv = join(c.out_dir, "toeplitz.csv");
    fock::write_matrix_csv(csv, T.entries);
    Json result;
    result["N"] = c.N;
    result["dimension"] = static_cast<int>(T.entries.rows());
    result["grid"] = fock::to_json(grid);
    result["frobenius_norm"] = T.entries.norm();
    write_report(c, "assemble", result, {csv});
    return 0;
}

int cmd_ess_spec(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::BoundaryReport rep = fock::essential_spectrum_vo(
        f, c.schedule(), c.params.n, c.angular_samples, c.cluster_tol, c.vo_threshold);
    std::string csv = join(c.out_dir, "ess-spec.csv");
    std::string body = "re,im,multiplicity\n";
    for (size_t i = 0; i < rep.set.points.size(); ++i)
        body += fock::csv_cell(rep.set.points[i]) + "," +
                std::to_string(rep.set.multiplicities[i]) + "\n";
    fock::write_text(csv, body);
    write_report(c, "ess-spec", fock::to_json(rep), {csv});
    return 0;
}

int cmd_ess_norm(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::NormInterval iv = fock::essential_norm_bounds(f, c.params, c.schedule(), c.proj_norm,
                                                        c.angular_samples, c.cluster_tol);
    Json result;
    result["lower"] = iv.lower;
    result["upper"] = iv.upper;
    result["p2_exact"] = iv.p2_exact;
    write_report(c, "ess-norm", result, {});
    return 0;
}

int cmd_fredholm(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::FredholmReport rep = fock::fredholm_test_vo(f, c.lambda, c.schedule(), c.params.n,
                                                      c.margin, c.angular_samples, c.cluster_tol);
    Json result;
    result["verdict"] = fredholm_name(rep.verdict);
    result["lambda"] = fock::to_json(c.lambda);
    result["distance"] = rep.distance;
    result["margin"] = rep.margin;
    result["drift"] = rep.drift;
    result["caveat"] = rep.caveat;
    write_report(c, "fredholm", result, {});
    return 0;
}

int cmd_band_profile(const RunConfig& c) {
    fock::QuadratureGrid grid = c.make_grid_nu(c.params.alpha);
    fock::GridOperator A;
    if (c.band_operator == "projection") {
        A = fock::projection_operator(grid, c.params);
    } else {
        fock::SymbolFunction f = parse_symbol(c.symbol);
        A = fock::multiplication_operator(f, grid, c.params);
    }
    fock::DecayProfile prof = fock::band_decay_profile(A, c.t_values, c.params.p);
    std::string csv = join(c.out_dir, "band-profile.csv");
    fock::write_curve_csv(csv, "t", "D", prof.points, prof.values);
    Json result = fock::to_json(prof);
    result["operator"] = c.band_operator;
    result["band_width"] = fock::band_width(A, 1e-10);
    result["grid"] = fock::to_json(grid);
    write_report(c, "band-profile", result, {csv});
    return 0;
}

int cmd_osc(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::OscillationCurve curve;
    curve.r = c.osc_r;
    curve.samples = c.osc_samples;
    for (double m : c.osc_magnitudes) {
        fock::Point z = fock::Point::Zero(c.params.n);
        z(0) = fock::Complex(m, 0.0);
        curve.magnitudes.push_back(m);
        curve.values.push_back(fock::oscillation(f, z, c.osc_r, c.osc_samples));
    }
    std::string csv = join(c.out_dir, "osc.csv");
    fock::write_curve_csv(csv, "magnitude", "oscillation", curve.magnitudes, curve.values);
    write_report(c, "osc", fock::to_json(curve), {csv});
    return 0;
}

int cmd_vmo(const RunConfig& c) {
    fock::SymbolFunction f = parse_symbol(c.symbol);
    fock::QuadratureGrid grid = c.make_grid_nu(c.params.alpha);
    fock::VmoReport rep =
        fock::vmo_via_berezin(f, c.vmo_radii, c.params, grid, c.schedule(), c.cluster_tol);
    std::string csv = join(c.out_dir, "vmo.csv");
    std::string body = "radius,berezin_re,berezin_im,mean_oscillation\n";
    for (size_t i = 0; i < rep.radii.size(); ++i)
        body += fock::csv_cell(rep.radii[i]) + "," + fock::csv_cell(rep.berezin_values[i]) +
                "," + fock::csv_cell(rep.mean_oscillation[i]) + "\n";
    fock::write_text(csv, body);
    Json result;
    result["radii"] = rep.radii;
    Json bv = Json::array();
    for (fock::Complex v : rep.berezin_values) bv.push_back(fock::to_json(v));
    result["berezin_values"] = bv;
    result["mean_oscillation"] = rep.mean_oscillation;
    result["proxy"] = fock::to_json(rep.proxy);
    write_report(c, "vmo", result, {csv});
    return 0;
}

int cmd_verify(const RunConfig& c) {
    std::vector<fock::CheckResult> results = fock::run_battery();
    bool all_pass = true;
    Json arr = Json::array();
    for (const fock::CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("%-22s %s  (%.1f s)  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.seconds, r.detail.c_str());
        Json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
    }
    Json result;
    result["pass"] = all_pass;
    result["checks"] = arr;
    write_report(c, "verify", result, {});
    return all_pass ? 0 : 1;
}

}  // namespace

int dispatch(const std::string& command, const RunConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);
    if (command == "assemble") return cmd_assemble(config);
    if (command == "ess-spec") return cmd_ess_spec(config);
    if (command == "ess-norm") return cmd_ess_norm(config);
    if (command == "fredholm") return cmd_fredholm(config);
    if (command == "band-profile") return cmd_band_profile(config);
    if (command == "osc") return cmd_osc(config);
    if (command == "vmo") return cmd_vmo(config);
    if (command == "verify") return cmd_verify(config);
    throw std::invalid_argument("unknown command: " + command);
}

}  // namespace fockcli
