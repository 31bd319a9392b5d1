#pragma once

// Shared helpers for the test suites: deterministic random inputs and
// independent oracles. Oracles never call the library routine they check.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "orekit/certify.hpp"
#include "orekit/diff_operator.hpp"
#include "orekit/text.hpp"

namespace orekit::testing {

using S = OrePoly<Rational>;
using L = LaurentSeries<Rational>;

inline S ore(const char* s) { return text::parse_ore<Rational>(s); }
inline DiffOperator dop(const char* s, int n, long prec) { return text::parse_operator(s, n, prec); }
inline PowerSeries pser(const char* s, int n, long prec) { return text::parse_series(s, n, prec); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    bool coin() { return uniform(0, 1) == 1; }

    // Exact Laurent polynomial with small integer coefficients in x^lo..x^hi.
    L laurent(long lo, long hi, bool nonzero = false)
    {
        for (;;) {
            std::vector<Rational> c;
            for (long e = lo; e <= hi; ++e) c.push_back(Rational(uniform(-3, 3)));
            L s(lo, c);
            if (!nonzero || !s.is_zero()) return s;
        }
    }

    // Operator of exact order `ord` with polynomial coefficients of degree <= deg.
    S ore_poly(long ord, long deg, long lowest = 0)
    {
        std::vector<L> c;
        for (long i = 0; i < ord; ++i) c.push_back(laurent(lowest, deg));
        c.push_back(laurent(lowest, deg, true));
        return S(c);
    }

    PowerSeries series(int n, long deg, long prec, int terms)
    {
        PowerSeries p(n, prec);
        for (int t = 0; t < terms; ++t) {
            Exponent e(static_cast<std::size_t>(n), 0);
            long left = uniform(0, deg);
            for (int i = 0; i < n && left > 0; ++i) {
                const long take = i == n - 1 ? left : uniform(0, left);
                e[static_cast<std::size_t>(i)] = static_cast<int>(take);
                left -= take;
            }
            p.add_term(e, Rational(uniform(-4, 4)));
        }
        return p;
    }

    DiffOperator diff_op(int n, long ord, long deg, long prec, int terms)
    {
        DiffOperator a(n, prec);
        for (int t = 0; t < terms; ++t) {
            Exponent d(static_cast<std::size_t>(n), 0);
            long left = uniform(0, ord);
            for (int i = 0; i < n && left > 0; ++i) {
                const long take = uniform(0, left);
                d[static_cast<std::size_t>(i)] = static_cast<int>(take);
                left -= take;
            }
            a.add_term(d, series(n, deg, prec, 3));
        }
        return a;
    }

private:
    std::mt19937_64 g_;
};

// --- Oracle: operators with polynomial coefficients acting on polynomials ---

// Univariate polynomial as exponent -> coefficient (negative exponents allowed).
using Poly1 = std::map<long, Rational>;

inline void add_to(Poly1& p, long e, const Rational& c)
{
    Rational& slot = p[e];
    slot += c;
    if (sgn(slot) == 0) p.erase(e);
}

inline Poly1 to_poly(const L& s)
{
    Poly1 p;
    if (s.is_zero()) return p;
    for (long e = s.valuation(); e < s.stored_end(); ++e) add_to(p, e, s.coefficient(e));
    return p;
}

// A f computed term by term: c x^a d^b sends x^e to c e(e-1)..(e-b+1) x^(a+e-b).
inline Poly1 act(const S& a, const Poly1& f)
{
    Poly1 out;
    for (long b = 0; b < a.size(); ++b) {
        const Poly1 c = to_poly(a.coeff(b));
        for (const auto& [e, fc] : f) {
            Rational fall = 1;
            for (long i = 0; i < b; ++i) fall *= Rational(e - i);
            if (sgn(fall) == 0) continue;
            for (const auto& [ce, cc] : c) add_to(out, ce + e - b, cc * fc * fall);
        }
    }
    return out;
}

// Multivariate polynomial as exponent tuple -> coefficient.
using PolyN = std::map<Exponent, Rational>;

inline PolyN act(const DiffOperator& a, const PolyN& f)
{
    PolyN out;
    for (const auto& [de, series] : a.terms()) {
        for (const auto& [fe, fc] : f) {
            Rational fall = 1;
            Exponent shifted = fe;
            for (std::size_t i = 0; i < fe.size(); ++i) {
                for (int k = 0; k < de[i]; ++k) fall *= Rational(fe[i] - k);
                shifted[i] = fe[i] - de[i];
            }
            if (sgn(fall) == 0) continue;
            for (const auto& [ce, cc] : series.terms()) {
                Exponent e = shifted;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += ce[i];
                Rational& slot = out[e];
                slot += cc * fc * fall;
                if (sgn(slot) == 0) out.erase(e);
            }
        }
    }
    return out;
}

inline PolyN truncate(const PolyN& p, long degree)
{
    PolyN out;
    for (const auto& [e, c] : p)
        if (total_degree(e) < degree) out.emplace(e, c);
    return out;
}

inline PolyN to_poly(const PowerSeries& p) { return PolyN(p.terms().begin(), p.terms().end()); }

// --- Oracle: Gaussian elimination over Q ---

// Solves A y = b; returns false when inconsistent.
inline bool solvable(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return false;
    return true;
}

// Brute force: is w = sum_j c_j g_j with every c_j = sum_{b<=B, |e|<=E} y x^e d^b?
// Exact Laurent-polynomial inputs only; a linear system in the y's.
inline bool reachable(const ModuleVector<Rational>& w, const std::vector<ModuleVector<Rational>>& gens, long B, long E)
{
    struct Unknown {
        std::size_t j;
        long b, e;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (long b = 0; b <= B; ++b)
            for (long e = -E; e <= E; ++e) unknowns.push_back({j, b, e});
    // Equations indexed by (component, d-power, x-power).
    std::map<std::tuple<std::size_t, long, long>, std::size_t> eq;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    auto row = [&](std::size_t comp, long b, long e) -> std::size_t {
        auto key = std::make_tuple(comp, b, e);
        auto it = eq.find(key);
        if (it != eq.end()) return it->second;
        eq.emplace(key, a.size());
        a.emplace_back(unknowns.size(), Rational(0));
        rhs.emplace_back(0);
        return a.size() - 1;
    };
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const S mono = S::term(L::monomial(Rational(1), unknowns[u].e), unknowns[u].b);
        const ModuleVector<Rational>& g = gens[unknowns[u].j];
        for (std::size_t comp = 0; comp < g.size(); ++comp) {
            const S prod = mono * g[comp];
            for (long b = 0; b < prod.size(); ++b)
                for (const auto& [e, c] : to_poly(prod.coeff(b))) a[row(comp, b, e)][u] += c;
        }
    }
    for (std::size_t comp = 0; comp < w.size(); ++comp)
        for (long b = 0; b < w[comp].size(); ++b)
            for (const auto& [e, c] : to_poly(w[comp].coeff(b))) rhs[row(comp, b, e)] += c;
    return solvable(a, rhs);
}

// --- Random elements for the parse/print round trip ---

using SQt = OrePoly<RationalFunction>;
using LQt = LaurentSeries<RationalFunction>;

inline RationalFunction random_rf(Rng& rng)
{
    std::vector<Rational> n, d;
    for (int i = 0; i < 3; ++i) n.emplace_back(rng.uniform(-3, 3));
    for (int i = 0; i < 2; ++i) d.emplace_back(rng.uniform(-2, 2));
    d.emplace_back(1);
    return RationalFunction(ParamPoly(n), ParamPoly(d));
}

inline SQt random_qt(Rng& rng)
{
    std::vector<LQt> c;
    const long ord = rng.uniform(0, 2);
    for (long b = 0; b <= ord; ++b) {
        std::vector<RationalFunction> coeffs;
        for (int i = 0; i < 3; ++i) coeffs.push_back(rng.coin() ? random_rf(rng) : RationalFunction(rng.uniform(-2, 2)));
        c.emplace_back(rng.uniform(-2, 2), coeffs);
    }
    return SQt(c);
}

// Half exact, half carrying O-terms on some coefficients.
inline S random_s(Rng& rng)
{
    S a = rng.ore_poly(rng.uniform(0, 3), 3, rng.uniform(-3, 0));
    if (rng.coin()) {
        std::vector<L> c = a.coeffs();
        for (auto& s : c)
            if (rng.coin()) s = s.truncated(rng.uniform(-1, 5));
        a = S(c);
    }
    return a;
}

} // namespace orekit::testing
