#pragma once

#include <map>

#include "orekit/ore_poly.hpp"
#include "orekit/power_series.hpp"

namespace orekit {

// Element of D_n = Q[[x_1..x_n]]<d_1..d_n> in left normal form: a finite sum
// of power-series coefficients times d-monomials, keyed by the d-exponent.
// The whole operator carries a single total-degree precision.
class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(int nvars, long precision);

    static DiffOperator from_series(const PowerSeries& p);
    static DiffOperator term(const PowerSeries& p, const Exponent& d_exponent);
    static DiffOperator d(int nvars, int index, long precision);

    int nvars() const { return nvars_; }
    long precision() const { return prec_; }
    const std::map<Exponent, PowerSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Largest total d-degree; -1 for zero.
    long order() const;
    PowerSeries coefficient(const Exponent& d_exponent) const;

    void add_term(const Exponent& d_exponent, const PowerSeries& p);

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    // Normal-form product via d^a q = sum_{g <= a} C(a,g) d^g(q) d^(a-g).
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& b) { return *this = *this + b; }

    DiffOperator truncated(long precision) const;

    // Ring automorphism x -> map x, d -> map^{-T} d.
    DiffOperator linear_change(const RationalMatrix& map) const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b)
    {
        return a.nvars_ == b.nvars_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

private:
    void set_precision(long p);

    int nvars_ = 1;
    long prec_ = kDefaultPrecision;
    std::map<Exponent, PowerSeries> terms_;
};

bool equal_mod(const DiffOperator& a, const DiffOperator& b, long upto);

// A acting on a power series (d_i as partial derivative).
PowerSeries apply_to_series(const DiffOperator& a, const PowerSeries& f);

// D_1 -> Q((x))<d>, keeping the total-degree precision as absolute precision.
OrePoly<Rational> to_ore(const DiffOperator& a);
LaurentSeries<Rational> to_laurent(const PowerSeries& p);

} // namespace orekit
