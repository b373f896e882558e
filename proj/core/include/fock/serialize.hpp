#pragma once

#include "fock/band.hpp"
#include "fock/basis.hpp"
#include "fock/oscillation.hpp"
#include "fock/quadrature.hpp"
#include "fock/spectra.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fock {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);  // {re, im}
Json to_json(const FockParams& params);
Json to_json(const QuadratureGrid& grid);
Json to_json(const PointSet& set);
Json to_json(const BoundaryReport& report);
Json to_json(const DecayProfile& profile);
Json to_json(const OscillationCurve& curve);
Json to_json(const Eigen::MatrixXcd& m);

/// Deterministic dump: 17 significant digits for floats, fixed key order.
std::string dump_json(const Json& j, int indent = 2);

void write_text(const std::string& path, const std::string& text);

/// CSV numbers carry 9 significant digits.
std::string csv_cell(double x);
std::string csv_cell(Complex z);  // "re,im"

/// Row-major matrix CSV with "re,im" cell pairs.
void write_matrix_csv(const std::string& path, const Eigen::MatrixXcd& m);

void write_curve_csv(const std::string& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<double>& xs,
                     const std::vector<double>& ys);

}  // namespace fock
