#pragma once

#include <string>
#include <vector>

#include "orekit/rational.hpp"

namespace orekit {

// Dense univariate polynomial over Q in the parameter t; index = degree.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(std::vector<Rational> coeffs);
    static ParamPoly constant(const Rational& c);
    static ParamPoly t();

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly operator-() const;
    ParamPoly scaled(const Rational& c) const;
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    // a = q*b + r with deg r < deg b; b nonzero.
    static void divmod(const ParamPoly& a, const ParamPoly& b, ParamPoly& q, ParamPoly& r);
    static ParamPoly gcd(ParamPoly a, ParamPoly b);

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Element of the coefficient field Q(t): reduced fraction with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(ParamPoly::constant(1)) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(const Rational& c) : num_(ParamPoly::constant(c)), den_(ParamPoly::constant(1)) {}
    RationalFunction(ParamPoly num, ParamPoly den);
    static RationalFunction t();

    const ParamPoly& numerator() const { return num_; }
    const ParamPoly& denominator() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const;

private:
    ParamPoly num_;
    ParamPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.numerator().is_zero(); }
inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

} // namespace orekit
