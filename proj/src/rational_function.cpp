#include "orekit/rational_function.hpp"

#include <algorithm>

#include "orekit/errors.hpp"

namespace orekit {

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::constant(const Rational& c) { return ParamPoly(std::vector<Rational>{c}); }

ParamPoly ParamPoly::t() { return ParamPoly(std::vector<Rational>{0, 1}); }

void ParamPoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ParamPoly(std::move(r));
}

ParamPoly ParamPoly::operator-() const
{
    std::vector<Rational> r(c_);
    for (auto& c : r) c = -c;
    return ParamPoly(std::move(r));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ParamPoly(std::move(r));
}

ParamPoly ParamPoly::scaled(const Rational& c) const
{
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= c;
    return ParamPoly(std::move(r));
}

void ParamPoly::divmod(const ParamPoly& a, const ParamPoly& b, ParamPoly& q, ParamPoly& r)
{
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    const long db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (long d = a.degree(); d >= db; --d) {
        const Rational c = rem[static_cast<std::size_t>(d)] / b.lead();
        if (sgn(c) == 0) continue;
        quo[static_cast<std::size_t>(d - db)] = c;
        for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.c_[static_cast<std::size_t>(i)];
    }
    q = ParamPoly(std::move(quo));
    r = ParamPoly(std::move(rem));
}

ParamPoly ParamPoly::gcd(ParamPoly a, ParamPoly b)
{
    while (!b.is_zero()) {
        ParamPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.lead());
}

std::string ParamPoly::to_string() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const Rational& c = c_[static_cast<std::size_t>(d)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        const bool unit = (mag == 1);
        if (d == 0 || !unit) out += orekit::to_string(mag);
        if (d > 0) {
            if (!unit) out += "*";
            out += "t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

RationalFunction::RationalFunction(ParamPoly num, ParamPoly den)
{
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = ParamPoly();
        den_ = ParamPoly::constant(1);
        return;
    }
    ParamPoly g = ParamPoly::gcd(num, den);
    ParamPoly r;
    ParamPoly::divmod(num, g, num_, r);
    ParamPoly::divmod(den, g, den_, r);
    const Rational lc = den_.lead();
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
}

RationalFunction RationalFunction::t() { return RationalFunction(ParamPoly::t(), ParamPoly::constant(1)); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.num_.is_zero()) throw DomainError("division by zero in Q(t)");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const
{
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace orekit
