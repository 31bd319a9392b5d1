#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "orekit/laurent.hpp"

namespace orekit {

// Element of S = T((x))<d>: sum of c_i d^i with Laurent scalars written to the
// left of the d-powers (left normal form). Trailing coefficients that are
// exactly zero are trimmed; coefficients that only vanish at their precision
// are kept so that precision information survives, but they do not count
// towards the order.
template <CoefficientField F>
class OrePoly {
public:
    using Scalar = LaurentSeries<F>;

    OrePoly() = default;
    explicit OrePoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    OrePoly(const Scalar& s) : c_{s} { trim(); }

    static OrePoly constant(const F& c) { return OrePoly(Scalar::constant(c)); }
    static OrePoly one() { return constant(F(1L)); }
    static OrePoly x(long power = 1) { return OrePoly(Scalar::monomial(F(1L), power)); }
    static OrePoly d(long power = 1) { return term(Scalar::constant(F(1L)), power); }

    static OrePoly term(const Scalar& s, long d_power)
    {
        std::vector<Scalar> c(static_cast<std::size_t>(d_power + 1));
        c.back() = s;
        return OrePoly(std::move(c));
    }

    // Highest d-power with a coefficient that is nonzero at precision; -1 for zero.
    long order() const
    {
        for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }

    bool is_zero() const { return order() < 0; }
    bool is_exact_zero() const { return c_.empty(); }

    bool is_exact() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact(); });
    }

    // Least absolute precision over all stored coefficients (kExact if exact).
    long precision_floor() const
    {
        long p = kExact;
        for (const auto& s : c_) p = std::min(p, s.abs_precision());
        return p;
    }

    const Scalar& lc() const
    {
        const long k = order();
        if (k < 0) throw PrecisionInsufficient("leading coefficient of an operator that vanishes at precision");
        return c_[static_cast<std::size_t>(k)];
    }

    // Coefficient of d^i (exact zero past the stored range).
    Scalar coeff(long i) const
    {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Scalar();
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Scalar>& coeffs() const { return c_; }
    long size() const { return static_cast<long>(c_.size()); }

    void set_coeff(long i, const Scalar& s)
    {
        if (i >= static_cast<long>(c_.size())) c_.resize(static_cast<std::size_t>(i + 1));
        c_[static_cast<std::size_t>(i)] = s;
        trim();
    }

    OrePoly operator-() const
    {
        OrePoly r = *this;
        for (auto& s : r.c_) s = -s;
        return r;
    }

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) { return a.combine(b, false); }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a.combine(b, true); }
    OrePoly& operator+=(const OrePoly& b) { return *this = *this + b; }
    OrePoly& operator-=(const OrePoly& b) { return *this = *this - b; }

    // Product in normal form via d^i b = sum_k C(i,k) b^(k) d^(i-k).
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b)
    {
        if (a.c_.empty() || b.c_.empty()) return OrePoly();
        const std::size_t da = a.c_.size() - 1;
        std::vector<std::vector<Scalar>> derivs(b.c_.size());
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            derivs[j].reserve(da + 1);
            derivs[j].push_back(b.c_[j]);
            for (std::size_t k = 1; k <= da; ++k) derivs[j].push_back(derivs[j].back().derivative());
        }
        std::vector<Scalar> r(da + b.c_.size());
        for (std::size_t i = 0; i <= da; ++i) {
            const Scalar& ai = a.c_[i];
            if (ai.is_exact_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_exact_zero()) continue;
                for (std::size_t k = 0; k <= i; ++k) {
                    const Scalar& dk = derivs[j][k];
                    if (dk.is_exact_zero()) continue;
                    const F binom{Rational(binomial(static_cast<long>(i), static_cast<long>(k)))};
                    r[i + j - k] += (ai * dk).scaled(binom);
                }
            }
        }
        return OrePoly(std::move(r));
    }

    OrePoly& operator*=(const OrePoly& b) { return *this = *this * b; }

    // Left multiplication by a scalar: s * sum c_i d^i = sum (s c_i) d^i.
    OrePoly left_scaled(const Scalar& s) const
    {
        OrePoly r = *this;
        for (auto& c : r.c_) c = s * c;
        r.trim();
        return r;
    }

    OrePoly scaled(const F& k) const
    {
        OrePoly r = *this;
        for (auto& c : r.c_) c = c.scaled(k);
        r.trim();
        return r;
    }

    // Drops every coefficient that vanishes at precision.
    OrePoly pruned() const
    {
        OrePoly r = *this;
        for (auto& c : r.c_)
            if (c.is_zero()) c = Scalar();
        r.trim();
        return r;
    }

    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }

private:
    OrePoly combine(const OrePoly& b, bool subtract) const
    {
        std::vector<Scalar> r(std::max(c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = subtract ? r[i] - b.c_[i] : r[i] + b.c_[i];
        return OrePoly(std::move(r));
    }

    void trim()
    {
        while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

// a ≡ b: the difference vanishes at the precision it is known to.
template <CoefficientField F>
bool congruent(const OrePoly<F>& a, const OrePoly<F>& b)
{
    return (a - b).is_zero();
}

// True iff every coefficient of a - b vanishes below x^upto; throws when a
// coefficient is not known that far.
template <CoefficientField F>
bool equal_mod(const OrePoly<F>& a, const OrePoly<F>& b, long upto)
{
    const OrePoly<F> diff = a - b;
    for (const auto& c : diff.coeffs()) {
        if (upto > c.abs_precision())
            throw DomainError("requested degree " + std::to_string(upto) + " exceeds guaranteed precision");
        if (!c.truncated(upto).is_zero()) return false;
    }
    return true;
}

// A acting on a series: d as d/dx, scalars by multiplication.
template <CoefficientField F>
LaurentSeries<F> apply_to_series(const OrePoly<F>& a, const LaurentSeries<F>& f)
{
    LaurentSeries<F> out;
    LaurentSeries<F> deriv = f;
    for (long i = 0; i < a.size(); ++i) {
        if (i > 0) deriv = deriv.derivative();
        out += a.coeff(i) * deriv;
    }
    return out;
}

// The nu-fold commutator g -> g x - x g.
template <CoefficientField F>
OrePoly<F> nfold_commutator_x(OrePoly<F> a, long nu)
{
    const OrePoly<F> x = OrePoly<F>::x();
    for (long i = 0; i < nu; ++i) a = a * x - x * a;
    return a;
}

// The nu-fold commutator h -> h d - d h.
template <CoefficientField F>
OrePoly<F> nfold_commutator_d(OrePoly<F> a, long nu)
{
    const OrePoly<F> d = OrePoly<F>::d();
    for (long i = 0; i < nu; ++i) a = a * d - d * a;
    return a;
}

template <CoefficientField F>
struct DivisionResult {
    OrePoly<F> quotient;
    OrePoly<F> remainder;
    // Least absolute precision surviving in quotient and remainder.
    long precision = kExact;
};

// Right division beta = q * alpha + r with ord(r) < ord(alpha).
template <CoefficientField F>
DivisionResult<F> euclidean_divide(const OrePoly<F>& beta, const OrePoly<F>& alpha, Precision working)
{
    const long k = alpha.order();
    if (k < 0) {
        if (alpha.is_exact_zero()) throw DomainError("division by the zero operator");
        throw PrecisionInsufficient("divisor vanishes at precision");
    }
    const LaurentSeries<F> inv_lc = alpha.lc().inverse(working);
    DivisionResult<F> out;
    OrePoly<F> r = beta;
    for (long n = r.order(); n >= k; n = r.order()) {
        const OrePoly<F> t = OrePoly<F>::term(r.lc() * inv_lc, n - k);
        out.quotient += t;
        r -= t * alpha;
        if (r.order() >= n) throw PrecisionInsufficient("leading term did not cancel in division");
    }
    out.remainder = std::move(r);
    out.precision = std::min(out.quotient.precision_floor(), out.remainder.precision_floor());
    return out;
}

template <CoefficientField F>
struct MonicForm {
    LaurentSeries<F> unit;
    OrePoly<F> monic;
};

// alpha = unit * monic with monic having leading coefficient exactly 1.
template <CoefficientField F>
MonicForm<F> normalize_monic(const OrePoly<F>& alpha, Precision working)
{
    if (alpha.is_zero()) {
        if (alpha.is_exact_zero()) throw DomainError("cannot normalize the zero operator");
        throw PrecisionInsufficient("operator vanishes at precision");
    }
    MonicForm<F> out;
    out.unit = alpha.lc();
    const long k = alpha.order();
    out.monic = alpha.left_scaled(out.unit.inverse(working));
    // Drop vanishing coefficients above the order and pin the lead to 1.
    std::vector<LaurentSeries<F>> c(out.monic.coeffs().begin(), out.monic.coeffs().begin() + k);
    c.push_back(LaurentSeries<F>::constant(F(1L)));
    out.monic = OrePoly<F>(std::move(c));
    return out;
}

template <CoefficientField F>
struct GcrdResult {
    OrePoly<F> gcrd;    // monic
    OrePoly<F> u, v;    // u a + v b = gcrd
    // Left cofactors of the least common left multiple: lclm = s a = t b.
    OrePoly<F> lclm;
    OrePoly<F> s, t;
};

// Extended right Euclid. Remainders that vanish at precision end the sequence.
template <CoefficientField F>
GcrdResult<F> gcrd_bezout(const OrePoly<F>& a, const OrePoly<F>& b, Precision working)
{
    if (a.is_zero() && b.is_zero()) throw DomainError("gcrd of two zero operators");
    OrePoly<F> r0 = a, r1 = b;
    OrePoly<F> u0 = OrePoly<F>::one(), u1;
    OrePoly<F> v0, v1 = OrePoly<F>::one();
    while (!r1.is_zero()) {
        DivisionResult<F> qr = euclidean_divide(r0, r1, working);
        OrePoly<F> u2 = u0 - qr.quotient * u1;
        OrePoly<F> v2 = v0 - qr.quotient * v1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    GcrdResult<F> out;
    const MonicForm<F> g = normalize_monic(r0, working);
    const LaurentSeries<F> inv = g.unit.inverse(working);
    out.gcrd = g.monic;
    out.u = u0.left_scaled(inv);
    out.v = v0.left_scaled(inv);

    // u1 a + v1 b vanishes, so u1 a = -v1 b is a common left multiple.
    if (!a.is_zero() && !b.is_zero()) {
        const OrePoly<F> l = u1 * a;
        const MonicForm<F> lm = normalize_monic(l, working);
        const LaurentSeries<F> linv = lm.unit.inverse(working);
        out.lclm = lm.monic;
        out.s = u1.left_scaled(linv);
        out.t = (-v1).left_scaled(linv);
    }
    return out;
}

template <CoefficientField F>
struct LclmResult {
    OrePoly<F> lclm;
    OrePoly<F> s, t;  // lclm = s a = t b
};

template <CoefficientField F>
LclmResult<F> lclm(const OrePoly<F>& a, const OrePoly<F>& b, Precision working)
{
    if (a.is_zero() || b.is_zero()) throw DomainError("lclm needs two nonzero operators");
    GcrdResult<F> g = gcrd_bezout(a, b, working);
    return {std::move(g.lclm), std::move(g.s), std::move(g.t)};
}

} // namespace orekit
