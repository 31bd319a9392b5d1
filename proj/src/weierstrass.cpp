#include "orekit/weierstrass.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

namespace orekit {

namespace {

// Series in x_s and the remaining variables y, graded by the weight
// w(x_s^e y^b) = e + k |b| and known modulo weight >= wmax. Each entry maps a
// y-exponent (with a zero at position s) to the x_s coefficients 0..limit-1.
//
// The weighting is what keeps preparation exact: the division step divides by
// x_s^k (weight -k) and multiplies by terms with |b| >= 1 (weight >= k), so no
// step ever reaches below the weight to which its inputs are known.
class Weighted {
public:
    Weighted(int s, long k, long wmax) : s_(s), k_(k), wmax_(wmax) {}

    static Weighted from_series(const PowerSeries& p, int s, long k, long wmax)
    {
        Weighted w(s, k, wmax);
        for (const auto& [e, c] : p.terms()) {
            Exponent y = e;
            const long xe = y[static_cast<std::size_t>(s)];
            y[static_cast<std::size_t>(s)] = 0;
            w.add(y, xe, c);
        }
        return w;
    }

    static Weighted x_power(int nvars, int s, long k, long power, long wmax)
    {
        Weighted w(s, k, wmax);
        w.add(Exponent(static_cast<std::size_t>(nvars), 0), power, 1);
        return w;
    }

    long wmax() const { return wmax_; }
    bool empty() const { return t_.empty(); }
    long limit(const Exponent& y) const { return wmax_ - k_ * total_degree(y); }

    // Least weight of a stored coefficient; wmax when nothing is stored.
    long valuation() const
    {
        long v = wmax_;
        for (const auto& [y, c] : t_) {
            for (std::size_t e = 0; e < c.size(); ++e)
                if (sgn(c[e]) != 0) {
                    v = std::min(v, static_cast<long>(e) + k_ * total_degree(y));
                    break;
                }
        }
        return v;
    }

    void add(const Exponent& y, long e, const Rational& c)
    {
        if (sgn(c) == 0 || e < 0 || e >= limit(y)) return;
        auto& v = t_[y];
        if (static_cast<long>(v.size()) <= e) v.resize(static_cast<std::size_t>(e + 1));
        v[static_cast<std::size_t>(e)] += c;
    }

    Weighted operator-() const
    {
        Weighted r = *this;
        for (auto& [y, c] : r.t_)
            for (auto& x : c) x = -x;
        return r;
    }

    friend Weighted operator+(const Weighted& a, const Weighted& b)
    {
        Weighted r(a.s_, a.k_, std::min(a.wmax_, b.wmax_));
        for (const Weighted* w : {&a, &b})
            for (const auto& [y, c] : w->t_)
                for (std::size_t e = 0; e < c.size(); ++e) r.add(y, static_cast<long>(e), c[e]);
        r.tidy();
        return r;
    }

    friend Weighted operator-(const Weighted& a, const Weighted& b) { return a + (-b); }

    // Product computed as if both factors were exact, kept below weight `w`.
    // Both factors are brought to one common denominator so the inner loop is
    // integer multiply-add only.
    static Weighted raw_product(const Weighted& a, const Weighted& b, long w)
    {
        Weighted r(a.s_, a.k_, w);
        Integer da, db;
        const auto na = a.numerators(da);
        const auto nb = b.numerators(db);
        std::map<Exponent, std::vector<Integer>> acc;
        for (const auto& [ya, ca] : na) {
            for (const auto& [yb, cb] : nb) {
                Exponent y(ya.size());
                for (std::size_t i = 0; i < y.size(); ++i) y[i] = ya[i] + yb[i];
                const long lim = r.limit(y);
                if (lim <= 0) continue;
                auto& dst = acc[y];
                const std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(lim), ca.size() + cb.size() - 1);
                if (dst.size() < len) dst.resize(len);
                for (std::size_t i = 0; i < ca.size() && i < len; ++i) {
                    if (sgn(ca[i]) == 0) continue;
                    for (std::size_t j = 0; j < cb.size() && i + j < len; ++j)
                        mpz_addmul(dst[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
                }
            }
        }
        const Integer den = da * db;
        for (auto& [y, c] : acc) {
            std::vector<Rational> q(c.size());
            for (std::size_t e = 0; e < c.size(); ++e) {
                q[e] = Rational(c[e], den);
                q[e].canonicalize();
            }
            r.t_.emplace(y, std::move(q));
        }
        r.tidy();
        return r;
    }

    friend Weighted operator*(const Weighted& a, const Weighted& b)
    {
        const long w = std::min(a.valuation() + b.wmax_, b.valuation() + a.wmax_);
        return raw_product(a, b, std::min(w, std::max(a.wmax_, b.wmax_)));
    }

    // Terms with x_s-degree below k.
    Weighted low() const
    {
        Weighted r(s_, k_, wmax_);
        for (const auto& [y, c] : t_)
            for (std::size_t e = 0; e < c.size() && static_cast<long>(e) < k_; ++e) r.add(y, static_cast<long>(e), c[e]);
        r.tidy();
        return r;
    }

    // (g - low(g)) / x_s^k, known modulo weight wmax - k.
    Weighted high() const
    {
        Weighted r(s_, k_, wmax_ - k_);
        for (const auto& [y, c] : t_)
            for (std::size_t e = static_cast<std::size_t>(k_); e < c.size(); ++e)
                r.add(y, static_cast<long>(e) - k_, c[e]);
        r.tidy();
        return r;
    }

    // Terms whose y-degree is exactly d.
    Weighted degree_part(long d) const
    {
        Weighted r(s_, k_, wmax_);
        for (const auto& [y, c] : t_)
            if (total_degree(y) == d) r.t_.emplace(y, c);
        return r;
    }

    // Newton iteration v <- v (2 - u v), doubling the known weight each round.
    Weighted inverse(int nvars) const
    {
        const Exponent zero(static_cast<std::size_t>(nvars), 0);
        auto it = t_.find(zero);
        if (it == t_.end() || it->second.empty() || sgn(it->second[0]) == 0)
            throw DomainError("inverse of a non-unit series");
        Weighted v(s_, k_, 1);
        v.add(zero, 0, 1 / it->second[0]);
        for (long w = 1; w < wmax_;) {
            w = std::min(2 * w, wmax_);
            Weighted err = raw_product(*this, v, w);
            err.add(zero, 0, -1);
            err.tidy();
            Weighted next = raw_product(v, err, w);
            next = -next;
            for (const auto& [y, c] : v.t_)
                for (std::size_t e = 0; e < c.size(); ++e) next.add(y, static_cast<long>(e), c[e]);
            next.tidy();
            v = std::move(next);
        }
        return v;
    }

    // The embedding into total-degree-truncated series; every emitted term must lie below wmax.
    PowerSeries to_series(int nvars, long precision, std::optional<long> only_x_power = std::nullopt) const
    {
        PowerSeries out(nvars, precision);
        for (const auto& [y, c] : t_) {
            for (std::size_t e = 0; e < c.size(); ++e) {
                if (sgn(c[e]) == 0) continue;
                const long xe = static_cast<long>(e);
                if (xe + total_degree(y) >= precision) continue;
                if (only_x_power && xe != *only_x_power) continue;
                Exponent full = y;
                if (!only_x_power) full[static_cast<std::size_t>(s_)] = static_cast<int>(xe);
                out.add_term(full, c[e]);
            }
        }
        return out;
    }

private:
    std::map<Exponent, std::vector<Integer>> numerators(Integer& den) const
    {
        den = 1;
        for (const auto& [y, c] : t_)
            for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::map<Exponent, std::vector<Integer>> out;
        for (const auto& [y, c] : t_) {
            std::vector<Integer> n(c.size());
            for (std::size_t e = 0; e < c.size(); ++e) {
                mpz_divexact(n[e].get_mpz_t(), den.get_mpz_t(), c[e].get_den_mpz_t());
                n[e] *= c[e].get_num();
            }
            out.emplace(y, std::move(n));
        }
        return out;
    }

    void tidy()
    {
        for (auto it = t_.begin(); it != t_.end();) {
            auto& c = it->second;
            const long lim = limit(it->first);
            if (static_cast<long>(c.size()) > lim) c.resize(static_cast<std::size_t>(std::max(0L, lim)));
            while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
            it = c.empty() ? t_.erase(it) : std::next(it);
        }
    }

    int s_;
    long k_;
    long wmax_;
    std::map<Exponent, std::vector<Rational>> t_;
};

// x_s^k = q p + r: returns (u = q^-1, W = x_s^k - r).
std::pair<Weighted, Weighted> prepare_by_division(const Weighted& P, int nvars, int s, long k)
{
    const Weighted B = P.low();
    const Weighted U = P.high();
    const Weighted U_inv = U.inverse(nvars);
    const Weighted V = U_inv * B;
    Weighted g = Weighted::x_power(nvars, s, k, k, P.wmax());
    Weighted r(s, k, P.wmax());
    Weighted h_sum(s, k, P.wmax() - k);
    // Each round raises the least y-degree of g by at least one.
    for (long round = 0; !g.empty(); ++round) {
        if (round > P.wmax() + 1) throw DomainError("Weierstrass division did not stabilize");
        const Weighted H = g.high();
        r = r + g.low();
        h_sum = h_sum + H;
        g = -(H * V);
    }
    const Weighted q = h_sum * U_inv;
    return {q.inverse(nvars), Weighted::x_power(nvars, s, k, k, P.wmax()) - r};
}

// Solve p_d = sum_{i+j=d} u_i W_j degree by degree in y, with W_0 = x_s^k.
std::pair<Weighted, Weighted> prepare_graded(const Weighted& P, int nvars, int s, long k)
{
    const Weighted e = P.degree_part(0).high();
    const Weighted e_inv = e.inverse(nvars);
    std::vector<Weighted> u{e};
    std::vector<Weighted> W{Weighted::x_power(nvars, s, k, k, P.wmax())};
    for (long d = 1; k * d < P.wmax(); ++d) {
        Weighted R = P.degree_part(d);
        for (long i = 1; i < d; ++i) R = R - (u[static_cast<std::size_t>(i)] * W[static_cast<std::size_t>(d - i)]);
        const Weighted Wd = (R * e_inv).low();
        u.push_back((R - e * Wd).high());
        W.push_back(Wd);
    }
    Weighted us = u[0];
    Weighted Ws = W[0];
    for (std::size_t i = 1; i < u.size(); ++i) {
        us = us + u[i];
        Ws = Ws + W[i];
    }
    return {us, Ws};
}

} // namespace

PositionResult weierstrass_position(const PowerSeries& p, int s)
{
    if (s < 0 || s >= p.nvars()) throw DomainError("variable index out of range");
    const std::vector<Rational> r = p.restriction(s);
    PositionResult out;
    for (std::size_t e = 0; e < r.size(); ++e)
        if (sgn(r[e]) != 0) {
            out.in_position = true;
            out.determined = true;
            out.k = static_cast<long>(e);
            return out;
        }
    return out;
}

RationalMatrix shift_matrix(const std::vector<long>& shifts, int s)
{
    RationalMatrix m = identity_matrix(static_cast<int>(shifts.size()));
    for (std::size_t i = 0; i < shifts.size(); ++i)
        if (static_cast<int>(i) != s) m[i][static_cast<std::size_t>(s)] = shifts[i];
    return m;
}

std::vector<std::vector<long>> change_candidates(int nvars, int s, long bound)
{
    if (s < 0 || s >= nvars) throw DomainError("variable index out of range");
    std::vector<std::vector<long>> out;
    std::vector<long> values{0};
    for (long c = 1; c <= bound; ++c) {
        values.push_back(c);
        values.push_back(-c);
    }
    for (long norm = 0; norm <= bound; ++norm) {
        std::vector<long> cur(static_cast<std::size_t>(nvars), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == nvars) {
                long mx = 0;
                for (long c : cur) mx = std::max(mx, std::labs(c));
                if (mx == norm) out.push_back(cur);
                return;
            }
            if (i == s) {
                rec(i + 1);
                return;
            }
            for (long c : values) {
                if (std::labs(c) > norm) continue;
                cur[static_cast<std::size_t>(i)] = c;
                rec(i + 1);
            }
            cur[static_cast<std::size_t>(i)] = 0;
        };
        rec(0);
    }
    return out;
}

ChangeResult generic_change(const std::vector<PowerSeries>& ps, int s, long bound)
{
    if (ps.empty()) throw DomainError("no series given");
    std::vector<long> target;
    for (const auto& p : ps) target.push_back(p.total_valuation());
    ChangeResult out;
    for (const auto& c : change_candidates(ps.front().nvars(), s, bound)) {
        ++out.tried;
        const RationalMatrix m = shift_matrix(c, s);
        bool ok = true;
        for (std::size_t i = 0; ok && i < ps.size(); ++i) {
            const PositionResult pr = weierstrass_position(ps[i].linear_change(m), s);
            ok = pr.in_position && pr.k == target[i];
        }
        if (ok) {
            out.found = true;
            out.shifts = c;
            out.map = m;
            return out;
        }
    }
    return out;
}

WeierstrassFactorization weierstrass_prepare(const PowerSeries& p, int s, PrepareMethod method)
{
    const PositionResult pos = weierstrass_position(p, s);
    if (!pos.in_position)
        throw PrecisionInsufficient("restriction to x" + std::to_string(s + 1) + " vanishes at precision " +
                                    std::to_string(p.precision()));
    const int n = p.nvars();
    WeierstrassFactorization out;
    out.s = s;
    out.k = pos.k;
    if (pos.k == 0) {
        out.unit = p;
        out.wpoly = PowerSeries::constant(n, 1, p.precision());
        out.precision = p.precision();
        return out;
    }
    out.precision = (p.precision() - 1) / pos.k;
    if (out.precision < 1) throw PrecisionInsufficient("precision too low for Weierstrass degree " + std::to_string(pos.k));

    const Weighted P = Weighted::from_series(p, s, pos.k, p.precision());
    const auto [u, W] = method == PrepareMethod::division ? prepare_by_division(P, n, s, pos.k)
                                                          : prepare_graded(P, n, s, pos.k);
    out.unit = u.to_series(n, out.precision);
    out.wpoly = W.to_series(n, out.precision);
    for (long j = 0; j < pos.k; ++j) out.b.push_back(W.to_series(n, out.precision, j));
    return out;
}

DiffOperator beta_operator(const DecompositionTerm& t, int s, int nvars, long precision)
{
    Exponent xe(static_cast<std::size_t>(nvars), 0);
    xe[static_cast<std::size_t>(s)] = static_cast<int>(t.x_power);
    Exponent de(static_cast<std::size_t>(nvars), 0);
    de[static_cast<std::size_t>(s)] = static_cast<int>(t.d_power);
    return DiffOperator::term(PowerSeries::monomial(nvars, xe, 1, precision), de);
}

Decomposition decompose_operator(const DiffOperator& v, int r, long bound)
{
    const int n = v.nvars();
    if (r < 0 || r >= n) throw DomainError("distinguished index out of range");
    Decomposition out;
    out.s = r;
    out.precision = v.precision();
    if (v.is_zero()) {
        out.change.found = true;
        out.change.shifts.assign(static_cast<std::size_t>(n), 0);
        out.change.map = identity_matrix(n);
        out.transformed = v;
        return out;
    }
    for (const auto& c : change_candidates(n, r, bound)) {
        ++out.change.tried;
        const RationalMatrix m = shift_matrix(c, r);
        DiffOperator w = v.linear_change(m);
        bool ok = true;
        for (const auto& kv : w.terms()) {
            if (!weierstrass_position(kv.second, r).in_position) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.change.found = true;
            out.change.shifts = c;
            out.change.map = m;
            out.transformed = std::move(w);
            break;
        }
    }
    if (!out.change.found)
        throw DomainError("no change of variables within bound " + std::to_string(bound) +
                          " puts every coefficient in Weierstrass position");

    for (const auto& [alpha, p] : out.transformed.terms()) {
        const WeierstrassFactorization f = weierstrass_prepare(p, r);
        out.precision = std::min(out.precision, f.precision);
        Exponent rest = alpha;
        rest[static_cast<std::size_t>(r)] = 0;
        for (long j = 0; j <= f.k; ++j) {
            const PowerSeries b = j < f.k ? f.b[static_cast<std::size_t>(j)] : PowerSeries::constant(n, 1, f.precision);
            if (b.is_zero()) continue;
            out.terms.push_back({f.unit, j, alpha[static_cast<std::size_t>(r)], DiffOperator::term(b, rest)});
        }
    }
    return out;
}

bool decomposition_shape_ok(const Decomposition& d)
{
    const auto s = static_cast<std::size_t>(d.s);
    for (const auto& t : d.terms) {
        if (t.x_power < 0 || t.d_power < 0) return false;
        if (t.omega.is_zero()) return false;
        const Exponent zero(static_cast<std::size_t>(t.omega.nvars()), 0);
        if (t.omega.precision() > 0 && sgn(t.omega.coefficient(zero)) == 0) return false;
        for (const auto& [de, series] : t.G.terms()) {
            if (de[s] != 0) return false;
            for (const auto& kv : series.terms())
                if (kv.first[s] != 0) return false;
        }
    }
    return true;
}

Verdict verify_decomposition(const DiffOperator& v, const Decomposition& d)
{
    const DiffOperator target = d.change.map.empty() ? v : v.linear_change(d.change.map);
    const int n = v.nvars();
    DiffOperator sum(n, target.precision());
    for (const auto& t : d.terms) {
        const DiffOperator omega = DiffOperator::from_series(t.omega);
        sum += omega * beta_operator(t, d.s, n, target.precision()) * t.G;
    }
    const long level = std::min(sum.precision(), target.precision());
    if (level < 1) return Verdict::indeterminate;
    return equal_mod(sum, target, level) ? Verdict::yes : Verdict::no;
}

} // namespace orekit
