#include "orekit/diff_operator.hpp"

#include <algorithm>

namespace orekit {

DiffOperator::DiffOperator(int nvars, long precision) : nvars_(nvars), prec_(precision)
{
    if (nvars < 1) throw DomainError("an operator ring needs at least one variable");
}

DiffOperator DiffOperator::from_series(const PowerSeries& p)
{
    return term(p, Exponent(static_cast<std::size_t>(p.nvars()), 0));
}

DiffOperator DiffOperator::term(const PowerSeries& p, const Exponent& d_exponent)
{
    DiffOperator r(p.nvars(), p.precision());
    r.add_term(d_exponent, p);
    return r;
}

DiffOperator DiffOperator::d(int nvars, int index, long precision)
{
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return term(PowerSeries::constant(nvars, 1, precision), e);
}

long DiffOperator::order() const
{
    long o = -1;
    for (const auto& kv : terms_) o = std::max<long>(o, total_degree(kv.first));
    return o;
}

PowerSeries DiffOperator::coefficient(const Exponent& d_exponent) const
{
    auto it = terms_.find(d_exponent);
    if (it == terms_.end()) return PowerSeries(nvars_, prec_);
    return it->second;
}

void DiffOperator::set_precision(long p)
{
    prec_ = p;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.truncated(p);
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

void DiffOperator::add_term(const Exponent& d_exponent, const PowerSeries& p)
{
    if (p.nvars() != nvars_ || static_cast<int>(d_exponent.size()) != nvars_)
        throw DomainError("mixed variable arity");
    if (p.precision() < prec_) set_precision(p.precision());
    auto it = terms_.find(d_exponent);
    PowerSeries sum = (it == terms_.end() ? PowerSeries(nvars_, prec_) : it->second) + p;
    sum = sum.truncated(prec_);
    if (sum.is_zero()) {
        if (it != terms_.end()) terms_.erase(it);
        return;
    }
    terms_.insert_or_assign(d_exponent, std::move(sum));
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b)
{
    if (a.nvars_ != b.nvars_) throw DomainError("mixed variable arity");
    DiffOperator r(a.nvars_, std::min(a.prec_, b.prec_));
    for (const auto& [e, p] : a.terms_) r.add_term(e, p);
    for (const auto& [e, p] : b.terms_) r.add_term(e, p);
    return r;
}

DiffOperator DiffOperator::operator-() const
{
    DiffOperator r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }

namespace {

// Enumerates all g <= a componentwise.
void sub_exponents(const Exponent& a, std::size_t i, Exponent& g, std::vector<Exponent>& out)
{
    if (i == a.size()) {
        out.push_back(g);
        return;
    }
    for (int k = 0; k <= a[i]; ++k) {
        g[i] = k;
        sub_exponents(a, i + 1, g, out);
    }
}

} // namespace

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b)
{
    if (a.nvars_ != b.nvars_) throw DomainError("mixed variable arity");
    const auto n = static_cast<std::size_t>(a.nvars_);
    // Result precision is the least precision over all contributing products.
    long prec = std::min(a.prec_, b.prec_);
    if (!b.terms_.empty())
        for (const auto& kv : a.terms_) prec = std::min<long>(prec, b.prec_ - total_degree(kv.first));
    prec = std::max(0L, prec);
    DiffOperator r(a.nvars_, prec);
    for (const auto& [ea, pa] : a.terms_) {
        std::vector<Exponent> gs;
        Exponent g(n, 0);
        sub_exponents(ea, 0, g, gs);
        for (const auto& [eb, pb] : b.terms_) {
            for (const auto& gam : gs) {
                PowerSeries dq = pb;
                Integer coef = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    if (gam[i] == 0) continue;
                    dq = dq.derivative(static_cast<int>(i), gam[i]);
                    coef *= binomial(ea[i], gam[i]);
                }
                if (dq.is_zero()) continue;
                Exponent e(n);
                for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i] - gam[i];
                r.add_term(e, (pa * dq).scaled(Rational(coef)).truncated(prec));
            }
        }
    }
    r.set_precision(prec);
    return r;
}

DiffOperator DiffOperator::truncated(long precision) const
{
    DiffOperator r = *this;
    r.set_precision(std::min(prec_, precision));
    return r;
}

DiffOperator DiffOperator::linear_change(const RationalMatrix& map) const
{
    const RationalMatrix dual = transpose(invert_matrix(map));
    const auto n = static_cast<std::size_t>(nvars_);
    // image of d_i = sum_l dual[i][l] d_l, a commuting polynomial in the d's
    using DPoly = std::map<Exponent, Rational>;
    auto mul = [](const DPoly& x, const DPoly& y) {
        DPoly out;
        for (const auto& [ex, cx] : x)
            for (const auto& [ey, cy] : y) {
                Exponent e(ex.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
                out[e] += cx * cy;
            }
        for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
        return out;
    };
    std::vector<DPoly> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (sgn(dual[i][l]) == 0) continue;
            Exponent e(n, 0);
            e[l] = 1;
            image[i][e] = dual[i][l];
        }
    }
    DiffOperator r(nvars_, prec_);
    for (const auto& [e, p] : terms_) {
        DPoly mono{{Exponent(n, 0), Rational(1)}};
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) mono = mul(mono, image[i]);
        const PowerSeries q = p.linear_change(map);
        for (const auto& [de, c] : mono) r.add_term(de, q.scaled(c));
    }
    return r;
}

bool equal_mod(const DiffOperator& a, const DiffOperator& b, long upto)
{
    if (upto > a.precision() || upto > b.precision())
        throw DomainError("requested degree " + std::to_string(upto) + " exceeds guaranteed precision");
    const DiffOperator diff = a - b;
    for (const auto& kv : diff.terms())
        if (!equal_mod(kv.second, PowerSeries(a.nvars(), kv.second.precision()), upto)) return false;
    return true;
}

PowerSeries apply_to_series(const DiffOperator& a, const PowerSeries& f)
{
    PowerSeries out(f.nvars(), std::min(a.precision(), f.precision()));
    for (const auto& [e, p] : a.terms()) {
        PowerSeries g = f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) g = g.derivative(static_cast<int>(i), e[i]);
        out += p * g;
    }
    return out;
}

LaurentSeries<Rational> to_laurent(const PowerSeries& p)
{
    if (p.nvars() != 1) throw DomainError("only univariate series embed in the Laurent field");
    std::vector<Rational> c(static_cast<std::size_t>(p.precision()), Rational(0));
    for (const auto& [e, x] : p.terms()) c[static_cast<std::size_t>(e[0])] = x;
    return LaurentSeries<Rational>(0, std::move(c), p.precision());
}

OrePoly<Rational> to_ore(const DiffOperator& a)
{
    if (a.nvars() != 1) throw DomainError("only D_1 embeds in the univariate operator ring");
    std::vector<LaurentSeries<Rational>> c(static_cast<std::size_t>(std::max(0L, a.order()) + 1),
                                           LaurentSeries<Rational>::zero(a.precision()));
    for (const auto& [e, p] : a.terms()) c[static_cast<std::size_t>(e[0])] = to_laurent(p);
    return OrePoly<Rational>(std::move(c));
}

} // namespace orekit
