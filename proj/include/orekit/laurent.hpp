#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "orekit/errors.hpp"
#include "orekit/rational.hpp"

namespace orekit {

// Computable commutative coefficient field (Q, Q(t)).
template <class F>
concept CoefficientField = std::regular<F> && std::constructible_from<F, long> &&
    std::constructible_from<F, Rational> && requires(const F& a, const F& b) {
        { F(a + b) };
        { F(a - b) };
        { F(a * b) };
        { F(a / b) };
        { F(-a) };
        { is_zero(a) } -> std::convertible_to<bool>;
        { to_string(a) } -> std::convertible_to<std::string>;
    };

template <CoefficientField F>
bool orekit_scalar_zero(const F& a)
{
    return is_zero(a);
}

// Absolute precision of an exact (untruncated) series.
inline constexpr long kExact = std::numeric_limits<long>::max() / 4;

inline long prec_add(long a, long b)
{
    if (a >= kExact || b >= kExact) return kExact;
    return a + b;
}

inline long prec_sub(long a, long b)
{
    if (a >= kExact) return kExact;
    return a - b;
}

// out[k] = sum_{i+j=k} a[i] b[j] for k < out.size(). Clears denominators first
// so the inner loop runs on integers and each output is reduced only once.
inline void convolve_rational(const std::vector<Rational>& a, const std::vector<Rational>& b, std::vector<Rational>& out)
{
    auto to_integers = [](const std::vector<Rational>& v, Integer& den) {
        den = 1;
        for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> n(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_divexact(n[i].get_mpz_t(), den.get_mpz_t(), v[i].get_den_mpz_t());
            n[i] *= v[i].get_num();
        }
        return n;
    };
    Integer da, db;
    const std::vector<Integer> na = to_integers(a, da);
    const std::vector<Integer> nb = to_integers(b, db);
    std::vector<Integer> acc(out.size());
    for (std::size_t i = 0; i < na.size() && i < acc.size(); ++i) {
        if (sgn(na[i]) == 0) continue;
        for (std::size_t j = 0; j < nb.size() && i + j < acc.size(); ++j)
            mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
    const Integer den = da * db;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        out[k] = Rational(acc[k], den);
        out[k].canonicalize();
    }
}

// Truncated univariate Laurent series c_v x^v + ... + O(x^P).
//
// Stored coefficients cover [val, val + size) with a nonzero first entry;
// every exponent in [val + size, P) is known to be zero, and nothing is known
// at or above the absolute precision P. P == kExact marks an exact series.
// An element with no stored coefficients is zero at its precision.
template <CoefficientField F>
class LaurentSeries {
public:
    LaurentSeries() = default;

    LaurentSeries(long val, std::vector<F> coeffs, long abs_prec = kExact)
        : val_(val), c_(std::move(coeffs)), prec_(abs_prec)
    {
        normalize();
    }

    static LaurentSeries zero(long abs_prec = kExact)
    {
        LaurentSeries s;
        s.prec_ = abs_prec;
        return s;
    }

    static LaurentSeries constant(const F& c) { return LaurentSeries(0, {c}); }

    static LaurentSeries monomial(const F& c, long e, long abs_prec = kExact)
    {
        return LaurentSeries(e, {c}, abs_prec);
    }

    // Zero at the known precision.
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return prec_ >= kExact; }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }

    long abs_precision() const { return prec_; }

    long valuation() const
    {
        if (c_.empty()) {
            if (is_exact()) throw DomainError("valuation of the zero series");
            throw PrecisionInsufficient("valuation-undetermined at precision " + std::to_string(prec_));
        }
        return val_;
    }

    // Lowest exponent that could carry a nonzero coefficient.
    long effective_valuation() const { return c_.empty() ? prec_ : val_; }

    // Number of known coefficients starting at the valuation.
    long known_length() const { return c_.empty() ? 0 : prec_sub(prec_, val_); }

    const F& leading() const
    {
        if (c_.empty()) (void)valuation();
        return c_.front();
    }

    // Exponent just past the last stored coefficient.
    long stored_end() const { return c_.empty() ? prec_ : val_ + static_cast<long>(c_.size()); }

    const std::vector<F>& stored() const { return c_; }

    F coefficient(long e) const
    {
        if (e >= prec_)
            throw PrecisionInsufficient("coefficient of x^" + std::to_string(e) + " beyond precision " +
                                        std::to_string(prec_));
        if (c_.empty() || e < val_ || e >= stored_end()) return F(0L);
        return c_[static_cast<std::size_t>(e - val_)];
    }

    bool is_monomial() const { return c_.size() == 1; }

    LaurentSeries truncated(long abs_prec) const
    {
        LaurentSeries r = *this;
        r.prec_ = std::min(prec_, abs_prec);
        r.normalize();
        return r;
    }

    LaurentSeries operator-() const
    {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = F(-c);
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, true); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
    {
        const long prec = std::min(prec_add(a.effective_valuation(), b.prec_),
                                   prec_add(b.effective_valuation(), a.prec_));
        if (a.c_.empty() || b.c_.empty()) return zero(prec);
        const long val = a.val_ + b.val_;
        std::size_t len = a.c_.size() + b.c_.size() - 1;
        if (prec < kExact) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(0L, prec - val)));
        std::vector<F> r(len, F(0L));
        if constexpr (std::same_as<F, Rational>) {
            convolve_rational(a.c_, b.c_, r);
        } else {
            for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
                if (orekit_scalar_zero(a.c_[i])) continue;
                for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j)
                    r[i + j] = F(r[i + j] + a.c_[i] * b.c_[j]);
            }
        }
        return LaurentSeries(val, std::move(r), prec);
    }

    LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }
    LaurentSeries& operator-=(const LaurentSeries& b) { return *this = *this - b; }
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

    LaurentSeries scaled(const F& k) const
    {
        if (orekit_scalar_zero(k)) return zero(prec_);
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = F(c * k);
        return r;
    }

    // Multiplication by x^k.
    LaurentSeries shifted(long k) const
    {
        LaurentSeries r = *this;
        r.val_ += k;
        r.prec_ = prec_add(prec_, k);
        return r;
    }

    // Formal d/dx applied `times` times; each application loses one unit of precision.
    LaurentSeries derivative(long times = 1) const
    {
        LaurentSeries r = *this;
        for (long t = 0; t < times; ++t) {
            if (r.c_.empty()) {
                r.prec_ = prec_sub(r.prec_, 1);
                continue;
            }
            std::vector<F> d(r.c_.size());
            for (std::size_t i = 0; i < r.c_.size(); ++i) d[i] = F(r.c_[i] * F(r.val_ + static_cast<long>(i)));
            r = LaurentSeries(r.val_ - 1, std::move(d), prec_sub(r.prec_, 1));
        }
        return r;
    }

    // Multiplicative inverse in the Laurent field. A non-monomial series is
    // inverted to relative precision min(known_length, working.order).
    LaurentSeries inverse(Precision working) const
    {
        if (c_.empty()) {
            if (is_exact()) throw DomainError("inverse of the zero series");
            throw PrecisionInsufficient("inverse of a series that vanishes at precision " + std::to_string(prec_));
        }
        const F inv0 = F(F(1L) / c_.front());
        if (c_.size() == 1) {
            return LaurentSeries(-val_, {inv0}, is_exact() ? kExact : prec_sub(prec_, 2 * val_));
        }
        long rel = std::max(1L, working.order);
        if (!is_exact()) rel = std::min(rel, known_length());
        std::vector<F> b(static_cast<std::size_t>(rel), F(0L));
        b[0] = inv0;
        for (long n = 1; n < rel; ++n) {
            F acc(0L);
            const long upto = std::min<long>(n, static_cast<long>(c_.size()) - 1);
            for (long i = 1; i <= upto; ++i) acc = F(acc + c_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)]);
            b[static_cast<std::size_t>(n)] = F(-(acc * inv0));
        }
        return LaurentSeries(-val_, std::move(b), -val_ + rel);
    }

    // Structural equality: same precision and same stored coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b)
    {
        if (a.prec_ != b.prec_ || a.c_.size() != b.c_.size()) return false;
        if (a.c_.empty()) return true;
        return a.val_ == b.val_ && a.c_ == b.c_;
    }

private:
    LaurentSeries combine(const LaurentSeries& b, bool subtract) const
    {
        const long prec = std::min(prec_, b.prec_);
        if (c_.empty() && b.c_.empty()) return zero(prec);
        long lo = c_.empty() ? b.val_ : (b.c_.empty() ? val_ : std::min(val_, b.val_));
        long hi = std::max(c_.empty() ? lo : stored_end(), b.c_.empty() ? lo : b.stored_end());
        hi = std::min(hi, prec);
        if (hi <= lo) return zero(prec);
        std::vector<F> r(static_cast<std::size_t>(hi - lo), F(0L));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const long e = val_ + static_cast<long>(i);
            if (e < hi) r[static_cast<std::size_t>(e - lo)] = c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            const long e = b.val_ + static_cast<long>(i);
            if (e >= hi) continue;
            F& slot = r[static_cast<std::size_t>(e - lo)];
            slot = subtract ? F(slot - b.c_[i]) : F(slot + b.c_[i]);
        }
        return LaurentSeries(lo, std::move(r), prec);
    }

    void normalize()
    {
        if (prec_ < kExact && !c_.empty()) {
            const long keep = std::max(0L, prec_ - val_);
            if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
        }
        std::size_t first = 0;
        while (first < c_.size() && orekit_scalar_zero(c_[first])) ++first;
        if (first == c_.size()) {
            c_.clear();
            val_ = 0;
            return;
        }
        if (first > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
            val_ += static_cast<long>(first);
        }
        while (!c_.empty() && orekit_scalar_zero(c_.back())) c_.pop_back();
    }

    long val_ = 0;
    std::vector<F> c_;
    long prec_ = kExact;
};

// True iff all coefficients of a - b below x^upto vanish. Throws if upto
// exceeds the guaranteed precision of either argument.
template <CoefficientField F>
bool equal_mod(const LaurentSeries<F>& a, const LaurentSeries<F>& b, long upto)
{
    if (upto > a.abs_precision() || upto > b.abs_precision())
        throw DomainError("requested degree " + std::to_string(upto) + " exceeds guaranteed precision");
    const LaurentSeries<F> d = (a - b).truncated(upto);
    return d.is_zero();
}

// a ≡ b at the precision both are known to.
template <CoefficientField F>
bool congruent(const LaurentSeries<F>& a, const LaurentSeries<F>& b)
{
    return (a - b).is_zero();
}

} // namespace orekit
