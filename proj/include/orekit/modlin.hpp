#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "orekit/ore_poly.hpp"

namespace orekit {

// Element of the free left module S^(m).
template <CoefficientField F>
using ModuleVector = std::vector<OrePoly<F>>;

template <CoefficientField F>
ModuleVector<F> unit_vector(std::size_t m, std::size_t i)
{
    ModuleVector<F> v(m);
    v[i] = OrePoly<F>::one();
    return v;
}

template <CoefficientField F>
ModuleVector<F> left_mul(const OrePoly<F>& s, const ModuleVector<F>& v)
{
    ModuleVector<F> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

template <CoefficientField F>
ModuleVector<F> add(const ModuleVector<F>& a, const ModuleVector<F>& b)
{
    ModuleVector<F> r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

template <CoefficientField F>
ModuleVector<F> sub(const ModuleVector<F>& a, const ModuleVector<F>& b)
{
    ModuleVector<F> r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

template <CoefficientField F>
bool is_zero(const ModuleVector<F>& v)
{
    return std::all_of(v.begin(), v.end(), [](const OrePoly<F>& p) { return p.is_zero(); });
}

template <CoefficientField F>
bool congruent(const ModuleVector<F>& a, const ModuleVector<F>& b)
{
    return a.size() == b.size() && is_zero(sub(a, b));
}

template <CoefficientField F>
long precision_floor(const ModuleVector<F>& v)
{
    long p = kExact;
    for (const auto& e : v) p = std::min(p, e.precision_floor());
    return p;
}

// Finitely many generators of a submodule of S^(m).
template <CoefficientField F>
struct SpanPresentation {
    std::size_t rank = 0;
    std::vector<ModuleVector<F>> generators;
};

template <CoefficientField F>
SpanPresentation<F> free_module(std::size_t m)
{
    SpanPresentation<F> p{m, {}};
    for (std::size_t i = 0; i < m; ++i) p.generators.push_back(unit_vector<F>(m, i));
    return p;
}

// Echelon form: rows[i] = sum_j transform[i][j] * input[j] for every row,
// nonzero rows first with strictly increasing pivot columns, monic pivots, and
// entries above a pivot of smaller order than the pivot.
template <CoefficientField F>
struct ReducedForm {
    std::size_t rank = 0;  // number of nonzero rows
    std::vector<ModuleVector<F>> rows;
    std::vector<std::vector<OrePoly<F>>> transform;
    std::vector<std::size_t> pivot_columns;  // one per nonzero row
    // Set when an entry was treated as zero although it only vanishes at its
    // precision; negative verdicts then become indeterminate.
    bool inexact_zero = false;
};

namespace detail {

template <CoefficientField F>
void row_axpy(std::vector<ModuleVector<F>>& rows, std::vector<std::vector<OrePoly<F>>>& transform, std::size_t target,
              const OrePoly<F>& q, std::size_t source)
{
    for (std::size_t c = 0; c < rows[target].size(); ++c) rows[target][c] -= q * rows[source][c];
    for (std::size_t c = 0; c < transform[target].size(); ++c) transform[target][c] -= q * transform[source][c];
}

template <CoefficientField F>
std::tuple<long, long, std::size_t> pivot_key(const OrePoly<F>& p, std::size_t index)
{
    return {p.order(), p.lc().valuation(), index};
}

} // namespace detail

// Row reduction over the right-Euclidean ring S using left row operations.
// Pivot candidates are ranked by lower d-order, then lower valuation of the
// leading coefficient, then input position.
template <CoefficientField F>
ReducedForm<F> hermite_reduce(const SpanPresentation<F>& m, Precision working)
{
    ReducedForm<F> out;
    const std::size_t n = m.generators.size();
    out.rows = m.generators;
    for (auto& r : out.rows) {
        if (r.size() != m.rank) throw DomainError("generator length does not match module rank");
    }
    out.transform.assign(n, std::vector<OrePoly<F>>(n));
    for (std::size_t i = 0; i < n; ++i) out.transform[i][i] = OrePoly<F>::one();

    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.rank && prow < n; ++col) {
        bool have_pivot = false;
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = prow; i < n; ++i) {
                const OrePoly<F>& e = out.rows[i][col];
                if (e.is_zero()) {
                    if (!e.is_exact_zero()) out.inexact_zero = true;
                    continue;
                }
                if (!best || detail::pivot_key(e, i) < detail::pivot_key(out.rows[*best][col], *best)) best = i;
            }
            if (!best) break;
            have_pivot = true;
            std::swap(out.rows[prow], out.rows[*best]);
            std::swap(out.transform[prow], out.transform[*best]);
            bool others = false;
            for (std::size_t i = prow + 1; i < n; ++i) {
                if (out.rows[i][col].is_zero()) continue;
                const DivisionResult<F> qr = euclidean_divide(out.rows[i][col], out.rows[prow][col], working);
                detail::row_axpy(out.rows, out.transform, i, qr.quotient, prow);
                if (!out.rows[i][col].is_zero()) others = true;
            }
            if (!others) break;
        }
        if (!have_pivot) continue;
        // Entries below the pivot now vanish at precision. Storing them as exact
        // zeros keeps later row operations from eroding precision through them.
        for (std::size_t i = prow + 1; i < n; ++i) {
            if (out.rows[i][col].is_exact_zero()) continue;
            out.inexact_zero = true;
            out.rows[i][col] = OrePoly<F>();
        }

        const LaurentSeries<F> inv = out.rows[prow][col].lc().inverse(working);
        for (auto& e : out.rows[prow]) e = e.left_scaled(inv);
        for (auto& e : out.transform[prow]) e = e.left_scaled(inv);
        out.rows[prow][col] = normalize_monic(out.rows[prow][col], working).monic;

        for (std::size_t i = 0; i < prow; ++i) {
            if (out.rows[i][col].order() < out.rows[prow][col].order()) continue;
            const DivisionResult<F> qr = euclidean_divide(out.rows[i][col], out.rows[prow][col], working);
            detail::row_axpy(out.rows, out.transform, i, qr.quotient, prow);
        }
        out.pivot_columns.push_back(col);
        ++prow;
    }
    out.rank = prow;
    for (std::size_t i = prow; i < n; ++i) {
        for (const auto& e : out.rows[i])
            if (!e.is_exact_zero()) out.inexact_zero = true;
    }
    return out;
}

// Replays the recorded transform on the input rows.
template <CoefficientField F>
std::vector<ModuleVector<F>> replay_transform(const ReducedForm<F>& r, const SpanPresentation<F>& m)
{
    std::vector<ModuleVector<F>> out;
    for (const auto& trow : r.transform) {
        ModuleVector<F> acc(m.rank);
        for (std::size_t j = 0; j < trow.size(); ++j) {
            if (trow[j].is_exact_zero()) continue;
            acc = add(acc, left_mul(trow[j], m.generators[j]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

template <CoefficientField F>
struct MembershipResult {
    Verdict verdict = Verdict::no;
    // On success: w = sum coefficients[j] * generators[j].
    std::vector<OrePoly<F>> coefficients;
};

template <CoefficientField F>
MembershipResult<F> membership(const ModuleVector<F>& w, const ReducedForm<F>& reduced, const SpanPresentation<F>& m,
                               Precision working)
{
    if (w.size() != m.rank) throw DomainError("vector length does not match module rank");
    MembershipResult<F> out;
    ModuleVector<F> rest = w;
    std::vector<OrePoly<F>> lambda(reduced.rank);
    std::size_t p = 0;
    for (std::size_t col = 0; col < m.rank; ++col) {
        if (p < reduced.rank && reduced.pivot_columns[p] == col) {
            const DivisionResult<F> qr = euclidean_divide(rest[col], reduced.rows[p][col], working);
            rest = sub(rest, left_mul(qr.quotient, reduced.rows[p]));
            lambda[p] += qr.quotient;
            ++p;
            if (rest[col].is_zero()) rest[col] = OrePoly<F>();
        }
        if (!rest[col].is_zero()) {
            out.verdict = reduced.inexact_zero ? Verdict::indeterminate : Verdict::no;
            return out;
        }
    }
    out.verdict = Verdict::yes;
    out.coefficients.assign(m.generators.size(), OrePoly<F>());
    for (std::size_t i = 0; i < reduced.rank; ++i) {
        for (std::size_t j = 0; j < m.generators.size(); ++j) {
            if (reduced.transform[i][j].is_exact_zero()) continue;
            out.coefficients[j] += lambda[i] * reduced.transform[i][j];
        }
    }
    return out;
}

template <CoefficientField F>
MembershipResult<F> membership(const ModuleVector<F>& w, const SpanPresentation<F>& m, Precision working)
{
    return membership(w, hermite_reduce(m, working), m, working);
}

// True iff the presentation generates all of S^(m): the reduced form is the identity.
template <CoefficientField F>
Verdict spans_free_module(const ReducedForm<F>& r, std::size_t rank)
{
    bool ok = r.rank == rank;
    for (std::size_t i = 0; ok && i < r.rank; ++i) ok = r.pivot_columns[i] == i && r.rows[i][i].order() == 0;
    if (ok) return Verdict::yes;
    return r.inexact_zero ? Verdict::indeterminate : Verdict::no;
}

template <CoefficientField F>
Verdict spans_free_module(const SpanPresentation<F>& m, Precision working)
{
    return spans_free_module(hermite_reduce(m, working), m.rank);
}

namespace detail {

inline Verdict both(Verdict a, Verdict b)
{
    if (a == Verdict::no || b == Verdict::no) return Verdict::no;
    if (a == Verdict::indeterminate || b == Verdict::indeterminate) return Verdict::indeterminate;
    return Verdict::yes;
}

template <CoefficientField F>
Verdict contained_in(const SpanPresentation<F>& a, const SpanPresentation<F>& b, Precision working)
{
    const ReducedForm<F> rb = hermite_reduce(b, working);
    Verdict v = Verdict::yes;
    for (const auto& g : a.generators) v = both(v, membership(g, rb, b, working).verdict);
    return v;
}

} // namespace detail

template <CoefficientField F>
Verdict module_equal(const SpanPresentation<F>& a, const SpanPresentation<F>& b, Precision working)
{
    if (a.rank != b.rank) throw DomainError("modules of different rank");
    return detail::both(detail::contained_in(a, b, working), detail::contained_in(b, a, working));
}

// Dimension of S/S alpha over the scalar field, found by reducing 1, d, d^2, ...
// modulo S alpha and stopping at the first linear dependence among residues.
template <CoefficientField F>
long colength(const OrePoly<F>& alpha, Precision working)
{
    const long k = alpha.order();
    if (k < 0) {
        if (alpha.is_exact_zero()) throw DomainError("colength of the zero operator");
        throw PrecisionInsufficient("operator vanishes at precision");
    }
    using Scalar = LaurentSeries<F>;
    // Echelon basis of residue vectors: (pivot index, vector).
    std::vector<std::pair<long, std::vector<Scalar>>> basis;
    for (long j = 0;; ++j) {
        const OrePoly<F> residue = euclidean_divide(OrePoly<F>::d(j), alpha, working).remainder;
        std::vector<Scalar> vec(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i) vec[static_cast<std::size_t>(i)] = residue.coeff(i);
        for (const auto& [piv, b] : basis) {
            const Scalar& c = vec[static_cast<std::size_t>(piv)];
            if (c.is_zero()) continue;
            const Scalar factor = c * b[static_cast<std::size_t>(piv)].inverse(working);
            for (long i = 0; i < k; ++i) vec[static_cast<std::size_t>(i)] -= factor * b[static_cast<std::size_t>(i)];
        }
        long piv = -1;
        for (long i = 0; i < k; ++i)
            if (!vec[static_cast<std::size_t>(i)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return j;
        basis.emplace_back(piv, std::move(vec));
    }
}

} // namespace orekit
