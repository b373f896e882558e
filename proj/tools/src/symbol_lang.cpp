#include "symbol_lang.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <memory>
#include <vector>

namespace fockcli {

using fock::Complex;
using fock::SymbolFunction;

namespace {

// --- scalar expressions in the radial variable s ----------------------------

using ScalarFn = std::function<double(double)>;

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    ScalarFn parse() {
        ScalarFn e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SymbolParseError("radial expression: trailing input at '" +
                                   text_.substr(pos_) + "'");
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ScalarFn expr() {
        ScalarFn lhs = term();
        while (true) {
            if (eat('+')) {
                ScalarFn rhs = term();
                lhs = [lhs, rhs](double s) { return lhs(s) + rhs(s); };
            } else if (eat('-')) {
                ScalarFn rhs = term();
                lhs = [lhs, rhs](double s) { return lhs(s) - rhs(s); };
            } else {
                return lhs;
            }
        }
    }

    ScalarFn term() {
        ScalarFn lhs = unary();
        while (true) {
            if (eat('*')) {
                ScalarFn rhs = unary();
                lhs = [lhs, rhs](double s) { return lhs(s) * rhs(s); };
            } else if (eat('/')) {
                ScalarFn rhs = unary();
                lhs = [lhs, rhs](double s) {
                    double d = rhs(s);
                    if (d == 0.0) throw std::runtime_error("radial expression: division by zero");
                    return lhs(s) / d;
                };
            } else {
                return lhs;
            }
        }
    }

    ScalarFn unary() {
        if (eat('-')) {
            ScalarFn e = unary();
            return [e](double s) { return -e(s); };
        }
        return power();
    }

    ScalarFn power() {
        ScalarFn base = atom();
        if (eat('^')) {
            ScalarFn e = unary();
            return [base, e](double s) { return std::pow(base(s), e(s)); };
        }
        return base;
    }

    ScalarFn atom() {
        skip_ws();
        if (eat('(')) {
            ScalarFn e = expr();
            if (!eat(')')) throw SymbolParseError("radial expression: expected ')'");
            return e;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        throw SymbolParseError("radial expression: unexpected character '" + std::string(1, c) +
                               "'");
    }

    ScalarFn number() {
        size_t end = pos_;
        while (end < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
                text_[end] == 'e' || text_[end] == 'E' ||
                ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
                 (text_[end - 1] == 'e' || text_[end - 1] == 'E'))))
            ++end;
        double v = std::stod(text_.substr(pos_, end - pos_));
        pos_ = end;
        return [v](double) { return v; };
    }

    ScalarFn name() {
        size_t end = pos_;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
        std::string id = text_.substr(pos_, end - pos_);
        pos_ = end;
        if (id == "s") return [](double s) { return s; };
        if (id == "pi") return [](double) { return M_PI; };
        auto wrap1 = [this](double (*fn)(double)) {
            if (!eat('(')) throw SymbolParseError("radial expression: expected '('");
            ScalarFn a = expr();
            if (!eat(')')) throw SymbolParseError("radial expression: expected ')'");
            return ScalarFn([fn, a](double s) { return fn(a(s)); });
        };
        if (id == "sin") return wrap1(std::sin);
        if (id == "cos") return wrap1(std::cos);
        if (id == "exp") return wrap1(std::exp);
        if (id == "sqrt") return wrap1(std::sqrt);
        if (id == "abs") return wrap1(std::fabs);
        if (id == "atan") return wrap1(std::atan);
        if (id == "tanh") return wrap1(std::tanh);
        throw SymbolParseError("radial expression: unknown name '" + id + "'");
    }
};

double sampled_sup(const ScalarFn& f) {
    double sup = 0.0;
    for (int k = 0; k <= 4000; ++k) {
        double s = std::expm1(k * (std::log(1e8 + 1.0) / 4000.0));
        sup = std::max(sup, std::abs(f(s)));
    }
    return sup * 1.001 + 1e-9;
}

// --- complex literals --------------------------------------------------------

Complex parse_complex(const std::string& raw) {
    std::string t;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw SymbolParseError("empty complex literal");

    auto read_part = [](const std::string& s, size_t& pos) -> double {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        bool digits = false;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
            ++pos;
            digits = true;
        }
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E') && digits) {
            ++pos;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        std::string body = s.substr(start, pos - start);
        if (!digits) return body == "-" ? -1.0 : 1.0;  // bare "i" / "-i"
        return std::stod(body);
    };

    size_t pos = 0;
    double first = read_part(t, pos);
    if (pos == t.size()) return Complex(first, 0.0);
    if (t[pos] == 'i' && pos + 1 == t.size()) return Complex(0.0, first);
    double second = read_part(t, pos);
    if (pos < t.size() && t[pos] == 'i' && pos + 1 == t.size()) return Complex(first, second);
    throw SymbolParseError("bad complex literal '" + raw + "'");
}

// --- symbol grammar ----------------------------------------------------------

class SymbolParser {
public:
    explicit SymbolParser(const std::string& text) : text_(text) {}

    SymbolFunction parse() {
        SymbolFunction f = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw SymbolParseError("symbol: trailing input at '" + text_.substr(pos_) + "'");
        return f;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    SymbolFunction sum() {
        SymbolFunction lhs = product();
        while (true) {
            if (eat('+')) {
                lhs = fock::sum_symbol(lhs, product());
            } else if (eat('-')) {
                lhs = fock::sum_symbol(
                    lhs, fock::product_symbol(fock::constant_symbol(-1.0), product()));
            } else {
                return lhs;
            }
        }
    }

    SymbolFunction product() {
        SymbolFunction lhs = factor();
        while (eat('*')) lhs = fock::product_symbol(lhs, factor());
        return lhs;
    }

    SymbolFunction factor() {
        skip_ws();
        if (eat('(')) {
            SymbolFunction f = sum();
            if (!eat(')')) throw SymbolParseError("symbol: expected ')'");
            return f;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            // bare number (optionally imaginary) as a constant
            size_t end = pos_;
            while (end < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
                    text_[end] == 'e' || text_[end] == 'E' ||
                    ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
                     (text_[end - 1] == 'e' || text_[end - 1] == 'E'))))
                ++end;
            if (end < text_.size() && text_[end] == 'i') ++end;
            Complex v = parse_complex(text_.substr(pos_, end - pos_));
            pos_ = end;
            return fock::constant_symbol(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return constructor();
        throw SymbolParseError("symbol: unexpected character '" + std::string(1, c) + "'");
    }

    SymbolFunction constructor() {
        size_t end = pos_;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
        std::string name = text_.substr(pos_, end - pos_);
        pos_ = end;
        if (!eat('(')) throw SymbolParseError("symbol: expected '(' after '" + name + "'");

        // raw argument list, split on top-level commas
        std::vector<std::string> args;
        std::string cur;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ',' && depth == 0) {
                args.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
            ++pos_;
        }
        if (pos_ == text_.size()) throw SymbolParseError("symbol: unterminated '" + name + "('");
        ++pos_;  // closing ')'
        if (!cur.empty() || !args.empty()) args.push_back(cur);

        // allow "key=value" argument forms
        for (std::string& a : args) {
            size_t eq = a.find('=');
            if (eq != std::string::npos) a = a.substr(eq + 1);
        }

        auto need = [&](size_t n) {
            if (args.size() != n)
                throw SymbolParseError("symbol: '" + name + "' expects " + std::to_string(n) +
                                       " argument(s), got " + std::to_string(args.size()));
        };
        if (name == "const") {
            need(1);
            return fock::constant_symbol(parse_complex(args[0]));
        }
        if (name == "bump") {
            need(3);
            return fock::bump_symbol(parse_complex(args[0]), std::stod(args[1]),
                                     std::stod(args[2]));
        }
        if (name == "indicator") {
            need(1);
            return fock::indicator_symbol(std::stod(args[0]));
        }
        if (name == "angular") {
            need(1);
            return fock::angular_symbol(std::stoi(args[0]));
        }
        if (name == "radial") {
            need(1);
            ScalarFn profile = ExprParser(args[0]).parse();
            double sup = sampled_sup(profile);
            return fock::radial_symbol(
                [profile](double s) { return Complex(profile(s)); }, sup);
        }
        throw SymbolParseError("symbol: unknown constructor '" + name + "'");
    }
};

}  // namespace

SymbolFunction parse_symbol(const std::string& text) {
    if (text.empty()) throw SymbolParseError("empty symbol specification");
    return SymbolParser(text).parse();
}

}  // namespace fockcli
