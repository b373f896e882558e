#include "run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fockcli {

using fock::Json;

void RunConfig::validate() const {
    if (grid_size < 1) throw std::invalid_argument("config: grid.size must be >= 1");
    if (N < 0) throw std::invalid_argument("config: N must be >= 0");
    if (t_values.empty()) throw std::invalid_argument("config: t_values must be nonempty");
    for (double t : t_values)
        if (!(t > 0.0) || t > 1.0)
            throw std::invalid_argument("config: t_values must lie in (0, 1]");
    for (size_t i = 1; i < t_values.size(); ++i)
        if (!(t_values[i] < t_values[i - 1]))
            throw std::invalid_argument("config: t_values must be strictly decreasing");
    if (!(r_first > 0.0) || !(r_last > r_first))
        throw std::invalid_argument("config: schedule radii must be increasing and positive");
    if (schedule_count < 2) throw std::invalid_argument("config: schedule.count must be >= 2");
    if (!(window_radius > 0.0))
        throw std::invalid_argument("config: schedule.window_radius must be > 0");
    if (!(cluster_tol > 0.0)) throw std::invalid_argument("config: cluster_tol must be > 0");
    if (!(vo_threshold > 0.0)) throw std::invalid_argument("config: vo_threshold must be > 0");
    if (margin < 0.0) throw std::invalid_argument("config: margin must be >= 0");
    if (!(delta > 0.0)) throw std::invalid_argument("config: delta must be > 0");
    if (proj_norm < 0.0) throw std::invalid_argument("config: proj_norm must be >= 0");
    if (angular_samples < 8)
        throw std::invalid_argument("config: angular_samples must be >= 8");
    if (band_operator != "projection" && band_operator != "multiplication")
        throw std::invalid_argument("config: band_operator must be projection or multiplication");
    if (!(osc_r > 0.0)) throw std::invalid_argument("config: osc.r must be > 0");
    if (osc_samples < 64) throw std::invalid_argument("config: osc.samples must be >= 64");
    if (osc_magnitudes.empty())
        throw std::invalid_argument("config: osc.magnitudes must be nonempty");
    for (size_t i = 1; i < osc_magnitudes.size(); ++i)
        if (!(osc_magnitudes[i] > osc_magnitudes[i - 1]))
            throw std::invalid_argument("config: osc.magnitudes must be strictly increasing");
    if (vmo_radii.size() < 2)
        throw std::invalid_argument("config: vmo_radii must contain at least 2 radii");
    for (size_t i = 1; i < vmo_radii.size(); ++i)
        if (!(vmo_radii[i] > vmo_radii[i - 1]))
            throw std::invalid_argument("config: vmo_radii must be strictly increasing");
    if (out_dir.empty()) throw std::invalid_argument("config: out must be nonempty");
}

fock::EscapeSchedule RunConfig::schedule() const {
    fock::EscapeSchedule s = fock::radial_schedule(r_first, r_last, schedule_count);
    s.window_radius = window_radius;
    return s;
}

fock::QuadratureGrid RunConfig::make_grid() const {
    return fock::build_grid(params, scheme, grid_size, grid_opts);
}

fock::QuadratureGrid RunConfig::make_grid_nu(double nu) const {
    return fock::build_grid_nu(params.n, nu, scheme, grid_size, grid_opts);
}

Json to_json(const RunConfig& c) {
    Json j;
    j["params"] = fock::to_json(c.params);
    Json grid;
    grid["scheme"] = fock::scheme_name(c.scheme);
    grid["size"] = c.grid_size;
    grid["angular"] = c.grid_opts.angular;
    if (c.grid_opts.split_s)
        grid["split_s"] = *c.grid_opts.split_s;
    else
        grid["split_s"] = nullptr;
    grid["extent"] = c.grid_opts.extent;
    j["grid"] = grid;
    j["symbol"] = c.symbol;
    j["N"] = c.N;
    j["t_values"] = c.t_values;
    Json sched;
    sched["r_first"] = c.r_first;
    sched["r_last"] = c.r_last;
    sched["count"] = c.schedule_count;
    sched["window_radius"] = c.window_radius;
    j["schedule"] = sched;
    j["cluster_tol"] = c.cluster_tol;
    j["vo_threshold"] = c.vo_threshold;
    j["margin"] = c.margin;
    j["delta"] = c.delta;
    j["lambda"] = fock::to_json(c.lambda);
    j["proj_norm"] = c.proj_norm;
    j["angular_samples"] = c.angular_samples;
    j["band_operator"] = c.band_operator;
    Json osc;
    osc["r"] = c.osc_r;
    osc["samples"] = c.osc_samples;
    osc["magnitudes"] = c.osc_magnitudes;
    j["osc"] = osc;
    j["vmo_radii"] = c.vmo_radii;
    j["out"] = c.out_dir;
    return j;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

double as_double(const Json& j, const std::string& key) {
    if (!j.is_number()) bad("'" + key + "' must be a number");
    return j.get<double>();
}

int as_int(const Json& j, const std::string& key) {
    if (!j.is_number_integer()) bad("'" + key + "' must be an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const std::string& key) {
    if (!j.is_string()) bad("'" + key + "' must be a string");
    return j.get<std::string>();
}

std::vector<double> as_doubles(const Json& j, const std::string& key) {
    if (!j.is_array()) bad("'" + key + "' must be an array of numbers");
    std::vector<double> v;
    for (const auto& e : j) {
        if (!e.is_number()) bad("'" + key + "' must be an array of numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

fock::Complex as_complex(const Json& j, const std::string& key) {
    if (j.is_number()) return fock::Complex(j.get<double>(), 0.0);
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        bad("'" + key + "' must be a number or an {re, im} object");
    return fock::Complex(as_double(j["re"], key + ".re"), as_double(j["im"], key + ".im"));
}

void reject_unknown(const Json& j, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) bad("unknown key '" + it.key() + "' in " + where);
}

}  // namespace

RunConfig parse_config(const Json& root) {
    if (!root.is_object()) bad("configuration must be a JSON object");
    const Json& j = root.contains("config") ? root["config"] : root;
    if (!j.is_object()) bad("'config' must be a JSON object");

    reject_unknown(j, {"params", "grid", "symbol", "N", "t_values", "schedule", "cluster_tol",
                       "vo_threshold", "margin", "delta", "lambda", "proj_norm",
                       "angular_samples", "band_operator", "osc", "vmo_radii", "out"},
                   "config");

    RunConfig c;
    if (j.contains("params")) {
        const Json& p = j["params"];
        if (!p.is_object()) bad("'params' must be an object");
        reject_unknown(p, {"n", "p", "alpha", "q", "measure_weight"}, "params");
        int n = p.contains("n") ? as_int(p["n"], "params.n") : 1;
        double pp = p.contains("p") ? as_double(p["p"], "params.p") : 2.0;
        double alpha = p.contains("alpha") ? as_double(p["alpha"], "params.alpha") : 1.0;
        try {
            c.params = fock::FockParams(n, pp, alpha);
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
    }
    if (j.contains("grid")) {
        const Json& g = j["grid"];
        if (!g.is_object()) bad("'grid' must be an object");
        reject_unknown(g, {"scheme", "size", "angular", "split_s", "extent"}, "grid");
        if (g.contains("scheme")) {
            try {
                c.scheme = fock::scheme_from_name(as_string(g["scheme"], "grid.scheme"));
            } catch (const std::invalid_argument& e) {
                bad(e.what());
            }
        }
        if (g.contains("size")) c.grid_size = as_int(g["size"], "grid.size");
        if (g.contains("angular")) c.grid_opts.angular = as_int(g["angular"], "grid.angular");
        if (g.contains("split_s") && !g["split_s"].is_null())
            c.grid_opts.split_s = as_double(g["split_s"], "grid.split_s");
        if (g.contains("extent")) c.grid_opts.extent = as_double(g["extent"], "grid.extent");
    }
    if (j.contains("symbol")) c.symbol = as_string(j["symbol"], "symbol");
    if (j.contains("N")) c.N = as_int(j["N"], "N");
    if (j.contains("t_values")) c.t_values = as_doubles(j["t_values"], "t_values");
    if (j.contains("schedule")) {
        const Json& s = j["schedule"];
        if (!s.is_object()) bad("'schedule' must be an object");
        reject_unknown(s, {"r_first", "r_last", "count", "window_radius"}, "schedule");
        if (s.contains("r_first")) c.r_first = as_double(s["r_first"], "schedule.r_first");
        if (s.contains("r_last")) c.r_last = as_double(s["r_last"], "schedule.r_last");
        if (s.contains("count")) c.schedule_count = as_int(s["count"], "schedule.count");
        if (s.contains("window_radius"))
            c.window_radius = as_double(s["window_radius"], "schedule.window_radius");
    }
    if (j.contains("cluster_tol")) c.cluster_tol = as_double(j["cluster_tol"], "cluster_tol");
    if (j.contains("vo_threshold"))
        c.vo_threshold = as_double(j["vo_threshold"], "vo_threshold");
    if (j.contains("margin")) c.margin = as_double(j["margin"], "margin");
    if (j.contains("delta")) c.delta = as_double(j["delta"], "delta");
    if (j.contains("lambda")) c.lambda = as_complex(j["lambda"], "lambda");
    if (j.contains("proj_norm")) c.proj_norm = as_double(j["proj_norm"], "proj_norm");
    if (j.contains("angular_samples"))
        c.angular_samples = as_int(j["angular_samples"], "angular_samples");
    if (j.contains("band_operator"))
        c.band_operator = as_string(j["band_operator"], "band_operator");
    if (j.contains("osc")) {
        const Json& o = j["osc"];
        if (!o.is_object()) bad("'osc' must be an object");
        reject_unknown(o, {"r", "samples", "magnitudes"}, "osc");
        if (o.contains("r")) c.osc_r = as_double(o["r"], "osc.r");
        if (o.contains("samples")) c.osc_samples = as_int(o["samples"], "osc.samples");
        if (o.contains("magnitudes"))
            c.osc_magnitudes = as_doubles(o["magnitudes"], "osc.magnitudes");
    }
    if (j.contains("vmo_radii")) c.vmo_radii = as_doubles(j["vmo_radii"], "vmo_radii");
    if (j.contains("out")) c.out_dir = as_string(j["out"], "out");

    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    return parse_config(j);
}

}  // namespace fockcli
