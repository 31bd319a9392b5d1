#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "orekit/integer_ore.hpp"
#include "orekit/modlin.hpp"

namespace orekit {

// alpha and delta_1..delta_m; M is spanned by g(f) = sum_i alpha delta_i f e_i
// for integer operators f.
template <CoefficientField F>
struct SpanContext {
    OrePoly<F> alpha;
    std::vector<OrePoly<F>> deltas;

    std::size_t rank() const { return deltas.size(); }
};

template <CoefficientField F>
void validate(const SpanContext<F>& ctx)
{
    if (ctx.deltas.empty()) throw DomainError("at least one delta is required");
    if (ctx.alpha.is_exact_zero()) throw DomainError("alpha must be nonzero");
    for (const auto& d : ctx.deltas) {
        if (d.is_exact_zero()) throw DomainError("every delta must be nonzero");
        for (const auto& c : d.coeffs())
            if (c.effective_valuation() < 0) throw DomainError("delta coefficients must be power series");
    }
}

// g(f), associated as alpha * (delta_i * f).
template <CoefficientField F>
ModuleVector<F> span_element(const SpanContext<F>& ctx, const IntegerOrePoly& f)
{
    const OrePoly<F> fo = f.template to_ore<F>();
    ModuleVector<F> v(ctx.rank());
    for (std::size_t i = 0; i < ctx.rank(); ++i) v[i] = ctx.alpha * (ctx.deltas[i] * fo);
    return v;
}

template <CoefficientField F>
struct CertificateTerm {
    OrePoly<F> s;
    IntegerOrePoly f;
};

// e_target = sum s_j g(f_j), claimed modulo x^(precision - slack) in every component.
template <CoefficientField F>
struct Certificate {
    std::size_t target = 0;
    std::vector<CertificateTerm<F>> terms;
    long precision = kDefaultPrecision;
    long slack = 0;
};

enum class ReductionFailure { degenerate_delta, invariant_violated };

class ReductionError : public std::runtime_error {
public:
    ReductionError(ReductionFailure kind, const std::string& step)
        : std::runtime_error(std::string(kind == ReductionFailure::degenerate_delta ? "degenerate-delta"
                                                                                     : "invariant-violated") +
                             ": " + step),
          kind_(kind)
    {
    }
    ReductionFailure kind() const { return kind_; }

private:
    ReductionFailure kind_;
};

struct ReductionTranscript {
    long requested_precision = 0;
    long working_precision = 0;
    long retries = 0;
    long tie_eliminations = 0;
    long valuation_shifts = 0;  // blocks whose lowest valuation was 0
    std::vector<std::string> steps;
};

template <CoefficientField F>
struct ReductionResult {
    std::vector<Certificate<F>> certificates;  // one per basis vector, in order
    ReductionTranscript transcript;
};

namespace detail {

// A module element together with its expression sum s * g(f) over the spanning set.
template <CoefficientField F>
struct Tracked {
    ModuleVector<F> value;
    std::map<IntegerOrePoly, OrePoly<F>> terms;
};

template <CoefficientField F>
void accumulate(std::map<IntegerOrePoly, OrePoly<F>>& into, const IntegerOrePoly& f, const OrePoly<F>& s)
{
    auto [it, inserted] = into.try_emplace(f, s);
    if (inserted) return;
    it->second += s;
    if (it->second.is_exact_zero()) into.erase(it);
}

template <CoefficientField F>
Tracked<F> scaled_by(const OrePoly<F>& s, const Tracked<F>& t)
{
    Tracked<F> r{left_mul(s, t.value), {}};
    for (const auto& [f, c] : t.terms) accumulate(r.terms, f, s * c);
    return r;
}

// a - s * b
template <CoefficientField F>
Tracked<F> minus_scaled(const Tracked<F>& a, const OrePoly<F>& s, const Tracked<F>& b)
{
    Tracked<F> r = a;
    r.value = sub(a.value, left_mul(s, b.value));
    for (const auto& [f, c] : b.terms) accumulate(r.terms, f, -(s * c));
    return r;
}

template <CoefficientField F>
Tracked<F> plus(const Tracked<F>& a, const Tracked<F>& b)
{
    Tracked<F> r = a;
    r.value = add(a.value, b.value);
    for (const auto& [f, c] : b.terms) accumulate(r.terms, f, c);
    return r;
}

// [h, y]_nu = sum_j (-1)^j C(nu, j) y^j h y^(nu-j) for y = x or d; with
// h = s g(f) the right factor moves into f.
template <CoefficientField F>
Tracked<F> commutator(const Tracked<F>& t, long nu, bool with_x)
{
    Tracked<F> r;
    r.value.resize(t.value.size());
    for (std::size_t i = 0; i < t.value.size(); ++i)
        r.value[i] = with_x ? nfold_commutator_x(t.value[i], nu) : nfold_commutator_d(t.value[i], nu);
    for (const auto& [f, s] : t.terms) {
        for (long j = 0; j <= nu; ++j) {
            Integer c = binomial(nu, j);
            if (j % 2 == 1) c = -c;
            const OrePoly<F> left = with_x ? OrePoly<F>::x(j) : OrePoly<F>::d(j);
            const IntegerOrePoly right = with_x ? IntegerOrePoly::monomial(1, nu - j, 0)
                                                : IntegerOrePoly::monomial(1, 0, nu - j);
            accumulate(r.terms, f * right, OrePoly<F>::constant(F(Rational(c))) * (left * s));
        }
    }
    return r;
}

template <CoefficientField F>
LaurentSeries<F> scalar_entry(const Tracked<F>& t, std::size_t i, const std::string& step)
{
    if (t.value[i].order() > 0) throw ReductionError(ReductionFailure::invariant_violated, step + ": entry is not a scalar");
    return t.value[i].coeff(0);
}

template <CoefficientField F>
struct Normalized {
    std::vector<OrePoly<F>> betas;      // beta_k = sum_i A[k][i] delta_i
    std::vector<std::vector<F>> A;
    std::vector<std::size_t> origin;
};

template <CoefficientField F>
std::tuple<long, long, std::size_t> delta_key(const OrePoly<F>& b, std::size_t origin)
{
    return {-b.order(), b.lc().valuation(), origin};
}

// Sort by (order desc, valuation of the leading coefficient asc, input index) and
// remove ties in (order, valuation) by F-linear subtraction.
template <CoefficientField F>
Normalized<F> normalize_deltas(const std::vector<OrePoly<F>>& deltas, ReductionTranscript& tr)
{
    const std::size_t m = deltas.size();
    Normalized<F> n;
    n.betas = deltas;
    n.A.assign(m, std::vector<F>(m, F(0L)));
    for (std::size_t i = 0; i < m; ++i) {
        n.A[i][i] = F(1L);
        n.origin.push_back(i);
        if (deltas[i].is_zero()) throw PrecisionInsufficient("delta " + std::to_string(i + 1) + " vanishes at precision");
    }
    for (;;) {
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return delta_key(n.betas[a], n.origin[a]) < delta_key(n.betas[b], n.origin[b]);
        });
        Normalized<F> s;
        for (std::size_t i : perm) {
            s.betas.push_back(n.betas[i]);
            s.A.push_back(n.A[i]);
            s.origin.push_back(n.origin[i]);
        }
        n = std::move(s);

        bool tie = false;
        for (std::size_t i = 0; i + 1 < m && !tie; ++i) {
            const OrePoly<F>& bi = n.betas[i];
            OrePoly<F>& bj = n.betas[i + 1];
            const long w = bi.order();
            if (bj.order() != w || bj.lc().valuation() != bi.lc().valuation()) continue;
            tie = true;
            const F t = F(bj.lc().leading() / bi.lc().leading());
            bj = bj - bi.left_scaled(LaurentSeries<F>::constant(t));
            for (std::size_t c = 0; c < m; ++c) n.A[i + 1][c] = F(n.A[i + 1][c] - t * n.A[i][c]);
            ++tr.tie_eliminations;
            tr.steps.push_back("tie: delta " + std::to_string(n.origin[i + 1] + 1) + " -= (" + to_string(t) +
                               ") * delta " + std::to_string(n.origin[i] + 1));
            if (bj.is_exact_zero())
                throw ReductionError(ReductionFailure::degenerate_delta,
                                     "delta " + std::to_string(n.origin[i + 1] + 1) +
                                         " is an F-linear combination of the others");
            const LaurentSeries<F> top = bj.coeff(w);
            if (top.is_zero() && !top.is_exact_zero())
                throw PrecisionInsufficient("valuation normalization lost the leading coefficient");
            if (bj.is_zero()) throw PrecisionInsufficient("valuation normalization produced a delta zero at precision");
        }
        if (!tie) return n;
    }
}

// The certificate for e_target evaluated back to a residual; the generator's own
// consistency check and precision accounting.
template <CoefficientField F>
ModuleVector<F> residual_of(const SpanContext<F>& ctx, const std::map<IntegerOrePoly, OrePoly<F>>& terms,
                            std::size_t target)
{
    ModuleVector<F> acc(ctx.rank());
    for (const auto& [f, s] : terms) acc = add(acc, left_mul(s, span_element(ctx, f)));
    acc[target] -= OrePoly<F>::one();
    return acc;
}

template <CoefficientField F>
ReductionResult<F> reduce_once(const SpanContext<F>& ctx, long requested, Precision working,
                               ReductionTranscript tr)
{
    const std::size_t m = ctx.rank();
    tr.working_precision = working.order;
    const Normalized<F> nd = normalize_deltas(ctx.deltas, tr);
    SpanContext<F> zctx{ctx.alpha, nd.betas};

    const long k = ctx.alpha.order();
    if (k < 0) throw PrecisionInsufficient("alpha vanishes at precision");
    const LaurentSeries<F> lc_inv = ctx.alpha.lc().inverse(working);

    std::vector<std::optional<Tracked<F>>> cert(m);
    auto project = [&](Tracked<F> t) {
        for (std::size_t j = 0; j < m; ++j)
            if (cert[j] && !t.value[j].is_exact_zero()) t = minus_scaled(t, t.value[j], *cert[j]);
        return t;
    };
    auto certify = [&](std::size_t i, const Tracked<F>& w, const std::string& step) {
        const LaurentSeries<F> c = scalar_entry(w, i, step);
        if (c.is_zero()) throw PrecisionInsufficient(step + ": pivot vanishes at precision");
        cert[i] = scaled_by(OrePoly<F>(c.inverse(working)), w);
    };

    const Tracked<F> generator{span_element(zctx, IntegerOrePoly::constant(1)), {{IntegerOrePoly::constant(1), OrePoly<F>::one()}}};

    for (std::size_t b0 = 0; b0 < m;) {
        const long omega = nd.betas[b0].order();
        std::size_t b1 = b0;
        while (b1 < m && nd.betas[b1].order() == omega) ++b1;
        const std::size_t l = b1 - b0;
        const long nu = k + omega;
        const std::string where = "block of order " + std::to_string(omega);
        tr.steps.push_back(where + ": coordinates " + std::to_string(b0 + 1) + ".." + std::to_string(b1) +
                           ", " + std::to_string(nu) + "-fold x-commutator");

        Tracked<F> v = commutator(project(generator), nu, true);
        const Rational nu_fact(factorial(nu));
        v = scaled_by(OrePoly<F>(lc_inv.scaled(F(Rational(Rational(1) / nu_fact)))), v);
        for (std::size_t i = 0; i < m; ++i) {
            const bool in_block = i >= b0 && i < b1;
            if (in_block && v.value[i].order() != 0)
                throw ReductionError(ReductionFailure::invariant_violated, where + ": commutator lost a leading coefficient");
            if (!in_block && !v.value[i].is_zero())
                throw ReductionError(ReductionFailure::invariant_violated, where + ": commutator left a lower-order entry");
        }

        if (l == 1) {
            certify(b0, v, where);
            b0 = b1;
            continue;
        }

        std::vector<Tracked<F>> chain;
        Tracked<F> cur = v;
        if (scalar_entry(cur, b0, where).valuation() == 0) {
            cur = scaled_by(OrePoly<F>::x(), cur);
            ++tr.valuation_shifts;
            tr.steps.push_back(where + ": lowest valuation is 0, multiplied by x");
        }
        for (std::size_t t = b0; t + 1 < b1; ++t) {
            const std::string step = where + ", elimination of coordinate " + std::to_string(t + 1);
            const LaurentSeries<F> lead = scalar_entry(cur, t, step);
            const long mu = lead.valuation();
            if (mu < 1) throw ReductionError(ReductionFailure::invariant_violated, step + ": valuation below 1");
            const Tracked<F> w = commutator(cur, mu, false);
            const LaurentSeries<F> u = scalar_entry(w, t, step);
            if (u.is_zero() || u.valuation() != 0)
                throw ReductionError(ReductionFailure::invariant_violated, step + ": derivative is not a unit");
            Tracked<F> next = minus_scaled(cur, OrePoly<F>(lead * u.inverse(working)), w);
            if (!next.value[t].is_zero())
                throw ReductionError(ReductionFailure::invariant_violated, step + ": coordinate did not cancel");
            for (std::size_t j = t + 1; j < b1; ++j) {
                const LaurentSeries<F> before = scalar_entry(cur, j, step);
                const LaurentSeries<F> after = scalar_entry(next, j, step);
                if (after.is_zero() || after.valuation() != before.valuation())
                    throw ReductionError(ReductionFailure::invariant_violated,
                                         step + ": valuation of coordinate " + std::to_string(j + 1) + " changed");
            }
            tr.steps.push_back(step + ": mu = " + std::to_string(mu));
            chain.push_back(std::move(cur));
            cur = std::move(next);
        }
        certify(b1 - 1, cur, where + ", last coordinate");
        for (std::size_t t = chain.size(); t-- > 0;) certify(b0 + t, project(chain[t]), where + ", back-substitution");
        b0 = b1;
    }

    // e_i = sum_k A[k][i] zeta_k
    ReductionResult<F> out;
    for (std::size_t i = 0; i < m; ++i) {
        Tracked<F> e;
        e.value.resize(m);
        for (std::size_t kk = 0; kk < m; ++kk) {
            if (is_zero(nd.A[kk][i])) continue;
            e = plus(e, scaled_by(OrePoly<F>::constant(nd.A[kk][i]), *cert[kk]));
        }
        Certificate<F> c;
        c.target = i;
        c.precision = requested;
        const ModuleVector<F> res = residual_of(ctx, e.terms, i);
        for (const auto& r : res)
            if (!r.is_zero())
                throw ReductionError(ReductionFailure::invariant_violated,
                                     "certificate for e" + std::to_string(i + 1) + " does not evaluate to it");
        const long floor = precision_floor(res);
        c.slack = floor >= kExact ? 0 : std::max(0L, requested - floor);
        for (auto& [f, s] : e.terms) c.terms.push_back({s, f});
        out.certificates.push_back(std::move(c));
    }
    out.transcript = std::move(tr);
    return out;
}

} // namespace detail

// Certificates e_i in M for every basis vector, following the valuation
// normalization / commutator / elimination argument. The working precision is
// doubled (up to four times the request) when a step runs out of precision or
// the surviving slack exceeds half the requested precision.
template <CoefficientField F>
ReductionResult<F> reduce(const SpanContext<F>& ctx, Precision precision)
{
    validate(ctx);
    ReductionTranscript tr;
    tr.requested_precision = precision.order;
    for (long factor = 1;; factor *= 2) {
        const bool last = factor == 4;
        try {
            ReductionResult<F> r = detail::reduce_once(ctx, precision.order, Precision{precision.order * factor}, tr);
            long worst = 0;
            for (const auto& c : r.certificates) worst = std::max(worst, c.slack);
            if (last || 2 * worst <= precision.order) return r;
            tr.steps.push_back("slack " + std::to_string(worst) + " too large at working precision " +
                               std::to_string(precision.order * factor));
        } catch (const PrecisionInsufficient& e) {
            if (last) throw;
            tr.steps.push_back(std::string(e.what()) + " at working precision " +
                               std::to_string(precision.order * factor));
        }
        ++tr.retries;
    }
}

enum class CheckVerdict { valid, invalid, indeterminate };

inline const char* to_string(CheckVerdict v)
{
    switch (v) {
    case CheckVerdict::valid: return "valid";
    case CheckVerdict::invalid: return "invalid";
    case CheckVerdict::indeterminate: return "indeterminate";
    }
    return "?";
}

// Independent check: multiplies out sum s_j alpha delta_i f_j and compares with
// the target basis vector at level precision - slack.
template <CoefficientField F>
CheckVerdict certificate_check(const SpanContext<F>& ctx, const Certificate<F>& c)
{
    if (c.target >= ctx.rank()) return CheckVerdict::invalid;
    if (c.slack < 0 || c.slack > c.precision) return CheckVerdict::indeterminate;
    const long level = c.precision - c.slack;

    std::vector<OrePoly<F>> sum(ctx.rank());
    for (const auto& term : c.terms) {
        const OrePoly<F> f = term.f.template to_ore<F>();
        for (std::size_t i = 0; i < ctx.rank(); ++i) sum[i] += term.s * (ctx.alpha * (ctx.deltas[i] * f));
    }
    sum[c.target] -= OrePoly<F>::one();

    bool unknown = false;
    for (const auto& p : sum) {
        for (const auto& coef : p.coeffs()) {
            if (!coef.is_zero() && coef.valuation() < level) return CheckVerdict::invalid;
            if (coef.abs_precision() < level) unknown = true;
        }
    }
    return unknown ? CheckVerdict::indeterminate : CheckVerdict::valid;
}

// The finite presentation {g(f) : f used in the certificate}.
template <CoefficientField F>
SpanPresentation<F> certificate_presentation(const SpanContext<F>& ctx, const Certificate<F>& c)
{
    SpanPresentation<F> p{ctx.rank(), {}};
    for (const auto& t : c.terms) p.generators.push_back(span_element(ctx, t.f));
    return p;
}

// ---------------------------------------------------------------------------
// Bounded witness searches for the existence statements on generating S^(m).

enum class WitnessKind {
    module_extension,  // S^(m) = M + S g(f)
    right_multiple,    // S^(m) = S^(m) rho + S (sum rho delta_i f e_i)
    augmented,         // S^(m+1) = S^(m+1) rho + S (e_0 + sum delta_i f e_i)
};

template <CoefficientField F>
struct WitnessProblem {
    WitnessKind kind = WitnessKind::augmented;
    OrePoly<F> alpha;  // module_extension only
    OrePoly<F> rho;    // right_multiple and augmented
    std::vector<OrePoly<F>> deltas;
    SpanPresentation<F> base;  // M, module_extension only
};

enum class WitnessStatus { found, bound_exhausted, indeterminate };

inline const char* to_string(WitnessStatus s)
{
    switch (s) {
    case WitnessStatus::found: return "found";
    case WitnessStatus::bound_exhausted: return "bound-exhausted";
    case WitnessStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

struct WitnessResult {
    WitnessStatus status = WitnessStatus::bound_exhausted;
    IntegerOrePoly f;
    long candidates_tried = 0;
    long indeterminate_candidates = 0;
};

// f = 0, then c x^a d^b, then binomials, with a, b <= bound and 1 <= |c| <= bound;
// ordered by degree, term count, support, height and coefficients 1, -1, 2, -2, ...
std::vector<IntegerOrePoly> witness_candidates(long bound);

template <CoefficientField F>
SpanPresentation<F> witness_presentation(const WitnessProblem<F>& p, const IntegerOrePoly& f)
{
    const OrePoly<F> fo = f.template to_ore<F>();
    const std::size_t m = p.deltas.size();
    SpanPresentation<F> out;
    switch (p.kind) {
    case WitnessKind::module_extension: {
        out = p.base;
        if (out.rank != m) throw DomainError("M and the deltas have different rank");
        ModuleVector<F> g(m);
        for (std::size_t i = 0; i < m; ++i) g[i] = p.alpha * (p.deltas[i] * fo);
        out.generators.push_back(std::move(g));
        break;
    }
    case WitnessKind::right_multiple: {
        out.rank = m;
        for (std::size_t i = 0; i < m; ++i) {
            ModuleVector<F> r(m);
            r[i] = p.rho;
            out.generators.push_back(std::move(r));
        }
        ModuleVector<F> g(m);
        for (std::size_t i = 0; i < m; ++i) g[i] = p.rho * (p.deltas[i] * fo);
        out.generators.push_back(std::move(g));
        break;
    }
    case WitnessKind::augmented: {
        out.rank = m + 1;
        for (std::size_t i = 0; i <= m; ++i) {
            ModuleVector<F> r(m + 1);
            r[i] = p.rho;
            out.generators.push_back(std::move(r));
        }
        ModuleVector<F> g(m + 1);
        g[0] = OrePoly<F>::one();
        for (std::size_t i = 0; i < m; ++i) g[i + 1] = p.deltas[i] * fo;
        out.generators.push_back(std::move(g));
        break;
    }
    }
    return out;
}

template <CoefficientField F>
WitnessResult witness_search(const WitnessProblem<F>& p, long bound, Precision working)
{
    if (bound < 0) throw DomainError("negative search bound");
    if (p.deltas.empty()) throw DomainError("at least one delta is required");
    WitnessResult out;
    for (const IntegerOrePoly& f : witness_candidates(bound)) {
        ++out.candidates_tried;
        Verdict v = Verdict::indeterminate;
        try {
            const SpanPresentation<F> pres = witness_presentation(p, f);
            v = spans_free_module(pres, working);
        } catch (const PrecisionInsufficient&) {
            v = Verdict::indeterminate;
        }
        if (v == Verdict::yes) {
            out.status = WitnessStatus::found;
            out.f = f;
            return out;
        }
        if (v == Verdict::indeterminate) ++out.indeterminate_candidates;
    }
    out.status = out.indeterminate_candidates > 0 ? WitnessStatus::indeterminate : WitnessStatus::bound_exhausted;
    return out;
}

// ---------------------------------------------------------------------------
// The one-variable layer, where E_1 is Euclidean.

template <CoefficientField F>
struct MultiplierCheck {
    Verdict verdict = Verdict::no;
    OrePoly<F> quotient;  // rho a = quotient q + remainder
    OrePoly<F> remainder;
};

// rho a_j in D_1 q: the right remainder vanishes and the quotient has power-series coefficients.
template <CoefficientField F>
std::vector<MultiplierCheck<F>> verify_multiplier(const OrePoly<F>& rho, const OrePoly<F>& q,
                                                  const std::vector<OrePoly<F>>& as, Precision working)
{
    if (q.is_exact_zero()) throw DomainError("q must be nonzero");
    std::vector<MultiplierCheck<F>> out;
    for (const auto& a : as) {
        const DivisionResult<F> qr = euclidean_divide(rho * a, q, working);
        MultiplierCheck<F> c{Verdict::yes, qr.quotient, qr.remainder};
        if (!qr.remainder.is_zero()) c.verdict = Verdict::no;
        for (const auto& s : qr.quotient.coeffs())
            if (!s.is_zero() && s.valuation() < 0) c.verdict = Verdict::no;
        out.push_back(std::move(c));
    }
    return out;
}

template <CoefficientField F>
struct PrincipalGenerator {
    OrePoly<F> generator;                 // monic
    std::vector<OrePoly<F>> coefficients;  // generator = sum coefficients[j] gens[j]
    std::vector<OrePoly<F>> cofactors;     // gens[j] = cofactors[j] generator
};

template <CoefficientField F>
PrincipalGenerator<F> principal_generator(const std::vector<OrePoly<F>>& gens, Precision working)
{
    PrincipalGenerator<F> out;
    std::size_t first = gens.size();
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (!gens[j].is_zero()) {
            first = j;
            break;
        }
    if (first == gens.size()) throw DomainError("no nonzero generator");
    out.coefficients.assign(gens.size(), OrePoly<F>());
    const MonicForm<F> mf = normalize_monic(gens[first], working);
    out.generator = mf.monic;
    out.coefficients[first] = OrePoly<F>(mf.unit.inverse(working));
    for (std::size_t j = first + 1; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        const GcrdResult<F> g = gcrd_bezout(out.generator, gens[j], working);
        for (auto& c : out.coefficients) c = g.u * c;
        out.coefficients[j] += g.v;
        out.generator = g.gcrd;
    }
    for (const auto& g : gens) out.cofactors.push_back(euclidean_divide(g, out.generator, working).quotient);
    return out;
}

template <CoefficientField F>
struct TwoGeneration {
    Verdict verdict = Verdict::no;
    OrePoly<F> gcrd;
    // On acceptance: c = first (a + d c) + second (b + e c).
    OrePoly<F> first, second;
};

template <CoefficientField F>
TwoGeneration<F> verify_two_generation(const OrePoly<F>& a, const OrePoly<F>& b, const OrePoly<F>& c,
                                       const OrePoly<F>& d, const OrePoly<F>& e, Precision working)
{
    const OrePoly<F> p = a + d * c;
    const OrePoly<F> q = b + e * c;
    TwoGeneration<F> out;
    if (p.is_zero() && q.is_zero()) {
        out.verdict = c.is_zero() ? Verdict::yes : Verdict::no;
        return out;
    }
    const GcrdResult<F> g = gcrd_bezout(p, q, working);
    out.gcrd = g.gcrd;
    const DivisionResult<F> qr = euclidean_divide(c, g.gcrd, working);
    if (!qr.remainder.is_zero()) return out;
    out.verdict = Verdict::yes;
    out.first = qr.quotient * g.u;
    out.second = qr.quotient * g.v;
    return out;
}

} // namespace orekit
