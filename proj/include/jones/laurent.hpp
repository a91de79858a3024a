#pragma once

#include "jones/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace jones {

// Sparse exact polynomial keyed by integer exponent. The tag fixes the
// variable the exponent refers to: powers of A for LaurentPoly, quarter
// powers of t for QuarterPoly (key k means t^(k/4)).
//
// Invariant: no stored coefficient is zero, so equal polynomials compare
// equal as maps.
template <class Tag>
class SparsePoly {
public:
    using Terms = std::map<int, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(Terms terms) : terms_(std::move(terms)) { prune(); }

    static SparsePoly monomial(int exponent, const Rational& coeff) {
        SparsePoly p;
        if (coeff != 0) p.terms_.emplace(exponent, coeff);
        return p;
    }
    static SparsePoly one() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int exponent, const Rational& coeff) {
        auto [it, inserted] = terms_.emplace(exponent, coeff);
        if (!inserted) it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }

    bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const SparsePoly& other) const { return !(*this == other); }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    Terms terms_;
};

struct VarA {};
struct VarT {};

// Bracket/Jones values in the bracket variable A.
using LaurentPoly = SparsePoly<VarA>;
// Jones values after the substitution A = t^(-1/4); exponents are stored as
// integer multiples of 1/4.
using QuarterPoly = SparsePoly<VarT>;

template <class Tag>
SparsePoly<Tag> add(const SparsePoly<Tag>& p, const SparsePoly<Tag>& q) {
    SparsePoly<Tag> r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

template <class Tag>
SparsePoly<Tag> mul(const SparsePoly<Tag>& p, const SparsePoly<Tag>& q) {
    SparsePoly<Tag> r;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) r.add_term(ep + eq, cp * cq);
    return r;
}

template <class Tag>
SparsePoly<Tag> scale(const SparsePoly<Tag>& p, const Rational& c) {
    SparsePoly<Tag> r;
    if (c == 0) return r;
    typename SparsePoly<Tag>::Terms terms;
    for (const auto& [e, coeff] : p.terms()) terms.emplace(e, coeff * c);
    return SparsePoly<Tag>(std::move(terms));
}

template <class Tag>
SparsePoly<Tag> operator+(const SparsePoly<Tag>& p, const SparsePoly<Tag>& q) {
    return add(p, q);
}
template <class Tag>
SparsePoly<Tag> operator*(const SparsePoly<Tag>& p, const SparsePoly<Tag>& q) {
    return mul(p, q);
}

// (-A^2 - A^-2)^k, the value of k extra closed loops in the state sum.
LaurentPoly delta_power(int k);

// (-A^3)^(-w): the writhe normalization factor, a single monomial.
LaurentPoly writhe_factor(int w);

// Substitute A = t^(-1/4): each term c*A^e becomes c*t^(-e/4).
QuarterPoly to_t(const LaurentPoly& p);

// Canonical text forms, ascending in the displayed exponent,
// e.g. "-A^-16 + A^-12 + A^-4" and "t + t^3 - t^4".
std::string render_a(const LaurentPoly& p);
std::string render_t(const QuarterPoly& p);

}  // namespace jones
