#pragma once

#include "fock/symbol.hpp"

#include <stdexcept>
#include <string>

namespace fockcli {

struct SymbolParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses the symbol mini-language:
///   const(c)                 complex constant, e.g. const(1), const(0.5-2i)
///   bump(center,radius,h)    smooth compactly supported bump
///   indicator(R)             characteristic function of |z| <= R
///   radial(expr)             expr in the variable s = |z|^2, e.g. radial(1/(1+s))
///   angular(k)               winding-k symbol of modulus < 1
/// combined with +, -, * and parentheses; a bare number is a constant.
fock::SymbolFunction parse_symbol(const std::string& text);

}  // namespace fockcli
