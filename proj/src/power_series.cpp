#include "orekit/power_series.hpp"

#include <algorithm>

namespace orekit {

PowerSeries::PowerSeries(int nvars, long precision) : nvars_(nvars), prec_(precision)
{
    if (nvars < 1) throw DomainError("a power series needs at least one variable");
    if (precision < 0) throw DomainError("negative precision");
}

PowerSeries PowerSeries::constant(int nvars, const Rational& c, long precision)
{
    return monomial(nvars, Exponent(static_cast<std::size_t>(nvars), 0), c, precision);
}

PowerSeries PowerSeries::variable(int nvars, int index, long precision)
{
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, e, 1, precision);
}

PowerSeries PowerSeries::monomial(int nvars, const Exponent& e, const Rational& c, long precision)
{
    PowerSeries p(nvars, precision);
    p.add_term(e, c);
    return p;
}

Rational PowerSeries::coefficient(const Exponent& e) const
{
    if (total_degree(e) >= prec_) throw PrecisionInsufficient("coefficient beyond total-degree precision");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSeries::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent arity mismatch");
    if (sgn(c) == 0 || total_degree(e) >= prec_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

void PowerSeries::check_compatible(const PowerSeries& b) const
{
    if (nvars_ != b.nvars_) throw DomainError("mixed variable arity");
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    a.check_compatible(b);
    PowerSeries r(a.nvars_, std::min(a.prec_, b.prec_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

PowerSeries PowerSeries::operator-() const { return scaled(-1); }

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    a.check_compatible(b);
    PowerSeries r(a.nvars_, std::min(a.prec_, b.prec_));
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) >= r.prec_) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const
{
    PowerSeries r(nvars_, prec_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

long PowerSeries::valuation(int var) const
{
    if (var < 0 || var >= nvars_) throw DomainError("variable index out of range");
    if (terms_.empty()) throw PrecisionInsufficient("valuation-undetermined at precision " + std::to_string(prec_));
    long v = prec_;
    for (const auto& kv : terms_) v = std::min<long>(v, kv.first[static_cast<std::size_t>(var)]);
    return v;
}

long PowerSeries::total_valuation() const
{
    if (terms_.empty()) throw PrecisionInsufficient("valuation-undetermined at precision " + std::to_string(prec_));
    long v = prec_;
    for (const auto& kv : terms_) v = std::min<long>(v, total_degree(kv.first));
    return v;
}

PowerSeries PowerSeries::derivative(int var, long times) const
{
    if (var < 0 || var >= nvars_) throw DomainError("variable index out of range");
    if (times < 0) throw DomainError("negative derivative order");
    if (times == 0) return *this;
    PowerSeries r(nvars_, std::max(0L, prec_ - times));
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] < times) continue;
        Exponent f = e;
        f[v] -= static_cast<int>(times);
        r.add_term(f, c * Rational(falling_factorial(e[v], times)));
    }
    return r;
}

PowerSeries PowerSeries::inverse() const
{
    const Exponent zero(static_cast<std::size_t>(nvars_), 0);
    const Rational c0 = coefficient(zero);
    if (sgn(c0) == 0) throw DomainError("inverse of a non-unit power series");
    // u^-1 = c0^-1 * sum_j (-(u - c0)/c0)^j; the tail has order >= 1.
    const PowerSeries t = (*this - constant(nvars_, c0, prec_)).scaled(-1 / c0);
    PowerSeries sum = constant(nvars_, 1, prec_);
    PowerSeries power = sum;
    for (long j = 1; j < prec_ && !power.is_zero(); ++j) {
        power = power * t;
        sum += power;
    }
    return sum.scaled(1 / c0);
}

PowerSeries PowerSeries::truncated(long precision) const
{
    PowerSeries r(nvars_, std::min(prec_, precision));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

PowerSeries PowerSeries::linear_change(const RationalMatrix& map) const
{
    if (static_cast<int>(map.size()) != nvars_) throw DomainError("change-of-variables matrix has wrong size");
    (void)invert_matrix(map);
    const auto n = static_cast<std::size_t>(nvars_);
    std::vector<int> top(n, 0);
    for (const auto& kv : terms_)
        for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], kv.first[i]);
    // powers[i][k] = (sum_j map[i][j] x_j)^k
    std::vector<std::vector<PowerSeries>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (map[i].size() != n) throw DomainError("change-of-variables matrix has wrong size");
        PowerSeries form(nvars_, prec_);
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n, 0);
            e[j] = 1;
            form.add_term(e, map[i][j]);
        }
        powers[i].push_back(constant(nvars_, 1, prec_));
        for (int k = 1; k <= top[i]; ++k) powers[i].push_back(powers[i].back() * form);
    }
    PowerSeries r(nvars_, prec_);
    for (const auto& [e, c] : terms_) {
        PowerSeries t = constant(nvars_, c, prec_);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) t = t * powers[i][static_cast<std::size_t>(e[i])];
        r += t;
    }
    return r;
}

std::vector<Rational> PowerSeries::restriction(int var) const
{
    if (var < 0 || var >= nvars_) throw DomainError("variable index out of range");
    std::vector<Rational> out(static_cast<std::size_t>(prec_), Rational(0));
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == e[static_cast<std::size_t>(var)]) out[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = c;
    }
    return out;
}

bool equal_mod(const PowerSeries& a, const PowerSeries& b, long upto)
{
    if (upto > a.precision() || upto > b.precision())
        throw DomainError("requested degree " + std::to_string(upto) + " exceeds guaranteed precision");
    const PowerSeries diff = a - b;
    for (const auto& kv : diff.terms())
        if (total_degree(kv.first) < upto) return false;
    return true;
}

RationalMatrix identity_matrix(int n)
{
    RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
    return m;
}

RationalMatrix invert_matrix(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv = identity_matrix(static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        if (a[col].size() != n) throw DomainError("matrix is not square");
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty()) return m;
    RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

} // namespace orekit
