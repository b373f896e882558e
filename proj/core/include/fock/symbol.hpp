#pragma once

#include "fock/params.hpp"

#include <functional>
#include <optional>
#include <string>

namespace fock {

enum class SymbolTag { Radial, Angular, CompactSupport, ConstantPlusC0, Constant, Generic };

std::string tag_name(SymbolTag t);

/// A bounded measurable symbol f on C^n, evaluable pointwise.
class SymbolFunction {
public:
    SymbolFunction() = default;
    SymbolFunction(std::function<Complex(const Point&)> eval, double sup_bound,
                   SymbolTag tag = SymbolTag::Generic,
                   std::optional<double> support_radius = std::nullopt)
        : eval_(std::move(eval)), sup_bound_(sup_bound), tag_(tag),
          support_radius_(support_radius) {}

    /// Evaluates f(z), checking the declared bound.
    Complex operator()(const Point& z) const {
        Complex v = eval_(z);
        if (std::abs(v) > sup_bound_ * (1.0 + 1e-9) + 1e-12)
            throw std::runtime_error("SymbolFunction: declared sup bound violated at a queried point");
        return v;
    }

    double sup_bound() const { return sup_bound_; }
    SymbolTag tag() const { return tag_; }
    std::optional<double> support_radius() const { return support_radius_; }

    /// f composed with the translation tau_z : w -> w - z.
    SymbolFunction translate(const Point& z) const;

private:
    std::function<Complex(const Point&)> eval_;
    double sup_bound_ = 0.0;
    SymbolTag tag_ = SymbolTag::Generic;
    std::optional<double> support_radius_;  // for compactly supported symbols
};

// --- stock constructors ----------------------------------------------------

SymbolFunction constant_symbol(Complex c);

/// chi_{|z| <= R}
SymbolFunction indicator_symbol(double R);

/// height * exp(1 - 1/(1 - (|z - center|/radius)^2)) inside, 0 outside.
SymbolFunction bump_symbol(Complex center, double radius, double height);

/// g(|z|^2) for a user radial profile; sup bound must be supplied.
SymbolFunction radial_symbol(std::function<Complex(double)> profile, double sup_bound);

/// z1^k / (1 + |z|^2)^{k/2}: winding-k angular symbol, |f| <= 1.
SymbolFunction angular_symbol(int k);

SymbolFunction sum_symbol(const SymbolFunction& a, const SymbolFunction& b);
SymbolFunction product_symbol(const SymbolFunction& a, const SymbolFunction& b);

}  // namespace fock
