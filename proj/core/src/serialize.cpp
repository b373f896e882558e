#include "fock/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fock {

namespace {

std::string fmt(double x, const char* spec) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_rec(v, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += fmt(j.get<double>(), "%.17g");
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const FockParams& params) {
    return Json{{"n", params.n}, {"p", params.p}, {"alpha", params.alpha}, {"q", params.q()}};
}

Json to_json(const QuadratureGrid& grid) {
    Json nodes = Json::array();
    for (const Point& z : grid.nodes) {
        Json pt = Json::array();
        for (long i = 0; i < z.size(); ++i) pt.push_back(to_json(z(i)));
        nodes.push_back(pt);
    }
    Json weights = Json::array();
    for (long i = 0; i < grid.weights.size(); ++i) weights.push_back(grid.weights(i));
    return Json{{"scheme", scheme_name(grid.scheme)},
                {"n", grid.n},
                {"measure_weight", grid.measure_weight},
                {"exactness_degree", grid.exactness_degree},
                {"extent", grid.extent},
                {"size", grid.size()},
                {"nodes", nodes},
                {"weights", weights}};
}

Json to_json(const PointSet& set) {
    Json pts = Json::array();
    for (size_t i = 0; i < set.points.size(); ++i) {
        Json pt = to_json(set.points[i]);
        pt["multiplicity"] = set.multiplicities[i];
        pts.push_back(pt);
    }
    return Json{{"cluster_tol", set.cluster_tol}, {"points", pts}};
}

Json to_json(const BoundaryReport& report) {
    Json j = to_json(report.set);
    j["drift"] = report.drift;
    j["stabilized"] = report.stabilized;
    j["vo_checked"] = report.vo_checked;
    j["caveat"] = report.caveat;
    return j;
}

Json to_json(const DecayProfile& profile) {
    return Json{{"points", profile.points},
                {"values", profile.values},
                {"sup_terms", profile.sup_terms},
                {"strictly_decreasing", profile.strictly_decreasing},
                {"p2_disclaimer", profile.p2_disclaimer}};
}

Json to_json(const OscillationCurve& curve) {
    return Json{{"r", curve.r},
                {"samples", curve.samples},
                {"magnitudes", curve.magnitudes},
                {"values", curve.values}};
}

Json to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_text: cannot open " + path);
    out << text;
}

std::string csv_cell(double x) { return fmt(x, "%.9g"); }

std::string csv_cell(Complex z) { return csv_cell(z.real()) + "," + csv_cell(z.imag()); }

void write_matrix_csv(const std::string& path, const Eigen::MatrixXcd& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix_csv: cannot open " + path);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << csv_cell(m(i, j));
        }
        out << "\n";
    }
}

void write_curve_csv(const std::string& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("write_curve_csv: length mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_curve_csv: cannot open " + path);
    out << x_name << "," << y_name << "\n";
    for (size_t i = 0; i < xs.size(); ++i)
        out << csv_cell(xs[i]) << "," << csv_cell(ys[i]) << "\n";
}

}  // namespace fock
