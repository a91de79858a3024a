#include "jones/laurent.hpp"

#include <numeric>

namespace jones {

LaurentPoly delta_power(int k) {
    if (k < 0) throw std::invalid_argument("delta_power: k must be nonnegative");
    LaurentPoly d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    LaurentPoly r = LaurentPoly::one();
    for (int i = 0; i < k; ++i) r = mul(r, d);
    return r;
}

LaurentPoly writhe_factor(int w) {
    // (-A^3)^(-w) = (-1)^w * A^(-3w); parity of |w| equals parity of w.
    int sign = (std::abs(w) % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(-3 * w, sign);
}

QuarterPoly to_t(const LaurentPoly& p) {
    QuarterPoly::Terms terms;
    for (const auto& [e, c] : p.terms()) terms.emplace(-e, c);
    return QuarterPoly(std::move(terms));
}

namespace {

// coeff == ±1 renders without the number unless the exponent part is empty.
void append_term(std::string& out, const Rational& coeff, const std::string& power, bool first) {
    bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (mag != 1 || power.empty()) {
        out += to_string(mag);
        if (!power.empty()) out += "*";
    }
    out += power;
}

std::string power_a(int e) {
    if (e == 0) return "";
    if (e == 1) return "A";
    return "A^" + std::to_string(e);
}

std::string power_t(int quarters) {
    if (quarters == 0) return "";
    if (quarters % 4 == 0) {
        int e = quarters / 4;
        if (e == 1) return "t";
        return "t^" + std::to_string(e);
    }
    int num = quarters;
    int den = 4;
    int g = std::gcd(std::abs(num), den);
    num /= g;
    den /= g;
    return "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string render_a(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_term(out, c, power_a(e), first);
        first = false;
    }
    return out;
}

std::string render_t(const QuarterPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [q, c] : p.terms()) {
        append_term(out, c, power_t(q), first);
        first = false;
    }
    return out;
}

}  // namespace jones
