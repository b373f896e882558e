#include "fock/symbol.hpp"

#include <cmath>

namespace fock {

std::string tag_name(SymbolTag t) {
    switch (t) {
        case SymbolTag::Radial: return "radial";
        case SymbolTag::Angular: return "angular";
        case SymbolTag::CompactSupport: return "compact-support";
        case SymbolTag::ConstantPlusC0: return "constant-plus-C0";
        case SymbolTag::Constant: return "constant";
        case SymbolTag::Generic: return "generic";
    }
    return "?";
}

SymbolFunction SymbolFunction::translate(const Point& z) const {
    auto inner = eval_;
    Point shift = z;
    SymbolTag tag = tag_ == SymbolTag::Constant ? SymbolTag::Constant : SymbolTag::Generic;
    return SymbolFunction(
        [inner, shift](const Point& w) { return inner(w - shift); },
        sup_bound_, tag);
}

SymbolFunction constant_symbol(Complex c) {
    return SymbolFunction([c](const Point&) { return c; }, std::abs(c), SymbolTag::Constant);
}

SymbolFunction indicator_symbol(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("indicator_symbol: R must be > 0");
    return SymbolFunction(
        [R](const Point& z) { return z.norm() <= R ? Complex(1.0) : Complex(0.0); },
        1.0, SymbolTag::CompactSupport, R);
}

SymbolFunction bump_symbol(Complex center, double radius, double height) {
    if (!(radius > 0.0)) throw std::invalid_argument("bump_symbol: radius must be > 0");
    return SymbolFunction(
        [center, radius, height](const Point& z) -> Complex {
            Point c = Point::Zero(z.size());
            c(0) = center;
            double d2 = (z - c).squaredNorm() / (radius * radius);
            if (d2 >= 1.0) return 0.0;
            return height * std::exp(1.0 - 1.0 / (1.0 - d2));
        },
        std::abs(height), SymbolTag::CompactSupport, std::abs(center) + radius);
}

SymbolFunction radial_symbol(std::function<Complex(double)> profile, double sup_bound) {
    auto f = std::move(profile);
    return SymbolFunction(
        [f](const Point& z) { return f(z.squaredNorm()); }, sup_bound, SymbolTag::Radial);
}

SymbolFunction angular_symbol(int k) {
    if (k < 1) throw std::invalid_argument("angular_symbol: winding must be >= 1");
    return SymbolFunction(
        [k](const Point& z) {
            double s = z.squaredNorm();
            return std::pow(z(0), k) / std::pow(1.0 + s, 0.5 * k);
        },
        1.0, SymbolTag::Angular);
}

SymbolFunction sum_symbol(const SymbolFunction& a, const SymbolFunction& b) {
    SymbolTag tag = SymbolTag::Generic;
    if ((a.tag() == SymbolTag::Constant && b.tag() == SymbolTag::CompactSupport) ||
        (b.tag() == SymbolTag::Constant && a.tag() == SymbolTag::CompactSupport))
        tag = SymbolTag::ConstantPlusC0;
    if (a.tag() == SymbolTag::Radial && b.tag() == SymbolTag::Radial) tag = SymbolTag::Radial;
    SymbolFunction ca = a, cb = b;
    return SymbolFunction(
        [ca, cb](const Point& z) { return ca(z) + cb(z); },
        a.sup_bound() + b.sup_bound(), tag);
}

SymbolFunction product_symbol(const SymbolFunction& a, const SymbolFunction& b) {
    SymbolFunction ca = a, cb = b;
    std::optional<double> supp;
    if (a.tag() == SymbolTag::CompactSupport) supp = a.support_radius();
    if (b.tag() == SymbolTag::CompactSupport)
        supp = supp ? std::min(*supp, *b.support_radius()) : b.support_radius();
    return SymbolFunction(
        [ca, cb](const Point& z) { return ca(z) * cb(z); },
        a.sup_bound() * b.sup_bound(),
        supp ? SymbolTag::CompactSupport : SymbolTag::Generic, supp);
}

}  // namespace fock
