#pragma once

#include <map>
#include <string>
#include <vector>

#include "orekit/errors.hpp"
#include "orekit/rational.hpp"

namespace orekit {

using Exponent = std::vector<int>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline int total_degree(const Exponent& e)
{
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Truncated power series in n variables over Q, known modulo all monomials of
// total degree >= precision. Sparse; no zero entries are stored.
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(int nvars, long precision);

    static PowerSeries constant(int nvars, const Rational& c, long precision);
    static PowerSeries variable(int nvars, int index, long precision);
    static PowerSeries monomial(int nvars, const Exponent& e, const Rational& c, long precision);

    int nvars() const { return nvars_; }
    long precision() const { return prec_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& b) { return *this = *this + b; }
    PowerSeries& operator-=(const PowerSeries& b) { return *this = *this - b; }
    PowerSeries scaled(const Rational& c) const;

    // Least exponent of variable `var` over the known terms.
    long valuation(int var) const;
    // Least total degree over the known terms (the order of the series).
    long total_valuation() const;

    PowerSeries derivative(int var, long times = 1) const;
    PowerSeries inverse() const;  // requires a nonzero constant term
    PowerSeries truncated(long precision) const;

    // Substitution x_i -> sum_j map[i][j] x_j; the matrix must be invertible.
    PowerSeries linear_change(const RationalMatrix& map) const;

    // The univariate restriction p(0,..,x_var,..,0) as coefficients 0..precision-1.
    std::vector<Rational> restriction(int var) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b)
    {
        return a.nvars_ == b.nvars_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const PowerSeries& b) const;

    int nvars_ = 1;
    long prec_ = kDefaultPrecision;
    std::map<Exponent, Rational> terms_;
};

// True iff all coefficients of a - b of total degree < upto vanish.
bool equal_mod(const PowerSeries& a, const PowerSeries& b, long upto);

RationalMatrix identity_matrix(int n);
RationalMatrix invert_matrix(const RationalMatrix& m);  // throws DomainError when singular
RationalMatrix transpose(const RationalMatrix& m);

} // namespace orekit
