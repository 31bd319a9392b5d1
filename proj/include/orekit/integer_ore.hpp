#pragma once

#include <map>
#include <string>
#include <utility>

#include "orekit/ore_poly.hpp"
#include "orekit/rational.hpp"

namespace orekit {

// Exact element of Z[x]<d>, stored as sum c * x^a d^b (x-powers to the left).
class IntegerOrePoly {
public:
    using Key = std::pair<long, long>;  // (x-power a, d-power b)

    IntegerOrePoly() = default;
    static IntegerOrePoly monomial(const Integer& c, long x_power, long d_power);
    static IntegerOrePoly constant(const Integer& c) { return monomial(c, 0, 0); }
    static IntegerOrePoly x() { return monomial(1, 1, 0); }
    static IntegerOrePoly d() { return monomial(1, 0, 1); }

    const std::map<Key, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long x_degree() const;
    long d_degree() const;
    // Largest |c| over the coefficients.
    Integer height() const;

    void add_term(const Integer& c, long x_power, long d_power);

    friend IntegerOrePoly operator+(const IntegerOrePoly& a, const IntegerOrePoly& b);
    friend IntegerOrePoly operator-(const IntegerOrePoly& a, const IntegerOrePoly& b);
    friend IntegerOrePoly operator*(const IntegerOrePoly& a, const IntegerOrePoly& b);
    IntegerOrePoly operator-() const;

    friend bool operator==(const IntegerOrePoly& a, const IntegerOrePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const IntegerOrePoly& a, const IntegerOrePoly& b) { return a.terms_ < b.terms_; }

    template <CoefficientField F>
    OrePoly<F> to_ore() const
    {
        OrePoly<F> out;
        for (const auto& [key, c] : terms_) {
            out += OrePoly<F>::term(LaurentSeries<F>::monomial(F(Rational(c)), key.first), key.second);
        }
        return out;
    }

private:
    std::map<Key, Integer> terms_;
};

// Canonical text: d-powers descending, then x-powers ascending, e.g. "x*d - 2".
std::string to_string(const IntegerOrePoly& f);

} // namespace orekit
