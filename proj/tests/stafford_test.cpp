#include "doctest.h"

#include "support.hpp"

using namespace orekit;
using namespace orekit::testing;

namespace {

const Precision P{16};
using Ctx = SpanContext<Rational>;
using Cert = Certificate<Rational>;

IntegerOrePoly ipoly(const char* s) { return text::parse_integer_ore(s); }

Cert hand_certificate(std::size_t target, std::vector<std::pair<S, IntegerOrePoly>> terms)
{
    Cert c;
    c.target = target;
    c.precision = 16;
    for (auto& [s, f] : terms) c.terms.push_back({s, f});
    return c;
}

void check_reduction(const Ctx& ctx)
{
    const auto r = reduce(ctx, P);
    REQUIRE(r.certificates.size() == ctx.rank());
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
        const Cert& c = r.certificates[i];
        CHECK(c.target == i);
        CHECK(certificate_check(ctx, c) == CheckVerdict::valid);
        const auto m = membership(unit_vector<Rational>(ctx.rank(), i), certificate_presentation(ctx, c), P);
        CHECK(m.verdict == Verdict::yes);
    }
}

WitnessProblem<Rational> problem(WitnessKind kind, S alpha_or_rho, std::vector<S> deltas,
                                 std::vector<ModuleVector<Rational>> base = {})
{
    WitnessProblem<Rational> p;
    p.kind = kind;
    if (kind == WitnessKind::module_extension)
        p.alpha = alpha_or_rho;
    else
        p.rho = alpha_or_rho;
    p.base = SpanPresentation<Rational>{deltas.size(), std::move(base)};
    p.deltas = std::move(deltas);
    return p;
}

void check_found(const WitnessProblem<Rational>& p, long bound, const char* expected_f = nullptr)
{
    const WitnessResult w = witness_search(p, bound, P);
    REQUIRE(w.status == WitnessStatus::found);
    if (expected_f) CHECK(w.f == ipoly(expected_f));
    const auto pres = witness_presentation(p, w.f);
    CHECK(module_equal(pres, free_module<Rational>(pres.rank), P) == Verdict::yes);
}

} // namespace

TEST_SUITE("stafford")
{
    const S d = S::d(), x = S::x(), one = S::one();

    TEST_CASE("hand certificates from the worked replays")
    {
        const Ctx ctx1{d, {one}};
        const Cert c1 = hand_certificate(0, {{one, ipoly("x")}, {-x, ipoly("1")}});
        CHECK(certificate_check(ctx1, c1) == CheckVerdict::valid);

        const Ctx ctx2{one, {d, one}};
        CHECK(certificate_check(ctx2, hand_certificate(0, {{one, ipoly("x")}, {-x, ipoly("1")}})) ==
              CheckVerdict::valid);
        // e2 = g(1) - d (g(x) - x g(1)).
        CHECK(certificate_check(ctx2, hand_certificate(1, {{one + d * x, ipoly("1")}, {-d, ipoly("x")}})) ==
              CheckVerdict::valid);
    }

    TEST_CASE("reduction examples")
    {
        check_reduction(Ctx{d, {one}});
        check_reduction(Ctx{one, {d, one}});
        const Ctx unit{S::constant(Rational(3)), {S::constant(Rational(2))}};
        const auto r = reduce(unit, P);
        REQUIRE(r.certificates.size() == 1);
        REQUIRE(r.certificates[0].terms.size() == 1);
        CHECK(r.certificates[0].terms[0].f == ipoly("1"));
        CHECK(r.certificates[0].terms[0].s == S::constant(Rational(1, 6)));
        CHECK(certificate_check(unit, r.certificates[0]) == CheckVerdict::valid);
    }

    TEST_CASE("larger contexts")
    {
        check_reduction(Ctx{d * d + x, {x * d + one, one + x, x * x * d}});
        check_reduction(Ctx{d, {one, one + x, one + x * x}});
        check_reduction(Ctx{x * d * d + d, {d * d + x, x * d * d, one + x + x * x}});
    }

    TEST_CASE("degenerate deltas are reported")
    {
        try {
            (void)reduce(Ctx{d, {one, one}}, P);
            FAIL("expected a reduction error");
        } catch (const ReductionError& e) {
            CHECK(e.kind() == ReductionFailure::degenerate_delta);
        }
        CHECK_THROWS_AS(reduce(Ctx{d, {}}, P), DomainError);
        CHECK_THROWS_AS(reduce(Ctx{d, {ore("x^-1")}}, P), DomainError);
    }

    TEST_CASE("valuation zero and ties are handled")
    {
        const auto r = reduce(Ctx{d, {one + x, one}}, P);
        CHECK(r.transcript.valuation_shifts > 0);
        CHECK(r.transcript.tie_eliminations > 0);
        for (const auto& c : r.certificates) CHECK(certificate_check(Ctx{d, {one + x, one}}, c) == CheckVerdict::valid);
    }

    TEST_CASE("checker verdicts")
    {
        const Ctx ctx{d, {one}};
        const auto r = reduce(ctx, P);
        Cert c = r.certificates[0];
        CHECK(certificate_check(ctx, c) == CheckVerdict::valid);

        Cert bad = c;
        bad.terms[0].s = bad.terms[0].s + one;
        CHECK(certificate_check(ctx, bad) == CheckVerdict::invalid);

        Cert starved = c;
        starved.slack = starved.precision + 1;
        CHECK(certificate_check(ctx, starved) == CheckVerdict::indeterminate);

        Cert wrong_target = c;
        wrong_target.target = 3;
        CHECK(certificate_check(ctx, wrong_target) == CheckVerdict::invalid);
    }

    TEST_CASE("random certificates and single-term mutations")
    {
        Rng rng(71);
        for (int i = 0; i < 25; ++i) {
            Ctx ctx;
            ctx.alpha = rng.ore_poly(rng.uniform(0, 2), 2);
            const long m = rng.uniform(1, 3);
            for (long j = 0; j < m; ++j) ctx.deltas.push_back(rng.ore_poly(rng.uniform(0, 2), 2));
            ReductionResult<Rational> r;
            try {
                r = reduce(ctx, P);
            } catch (const ReductionError& e) {
                CHECK(e.kind() == ReductionFailure::degenerate_delta);
                continue;
            }
            for (const auto& c : r.certificates) {
                CHECK(certificate_check(ctx, c) == CheckVerdict::valid);
                Cert bad = c;
                const std::size_t t = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(bad.terms.size()) - 1));
                bad.terms[t].s = bad.terms[t].s + one;
                CHECK(certificate_check(ctx, bad) == CheckVerdict::invalid);
            }
        }
    }

    TEST_CASE("bracket identities for g(f)")
    {
        Rng rng(72);
        for (int i = 0; i < 15; ++i) {
            Ctx ctx{rng.ore_poly(rng.uniform(0, 2), 2), {rng.ore_poly(1, 2), rng.ore_poly(0, 2)}};
            IntegerOrePoly f;
            for (int t = 0; t < 3; ++t) f.add_term(rng.uniform(-3, 3), rng.uniform(0, 2), rng.uniform(0, 2));
            const auto g = span_element(ctx, f);
            const auto gx = span_element(ctx, f * IntegerOrePoly::x());
            const auto gd = span_element(ctx, f * IntegerOrePoly::d());
            for (std::size_t c = 0; c < g.size(); ++c) {
                CHECK(g[c] * x - x * g[c] == gx[c] - x * g[c]);
                CHECK(g[c] * d - d * g[c] == gd[c] - d * g[c]);
            }
            // nu-fold x-commutator = sum_j (-1)^j C(nu, j) x^j g(f x^(nu - j)).
            for (long nu = 1; nu <= 4; ++nu) {
                for (std::size_t c = 0; c < g.size(); ++c) {
                    S expanded;
                    Integer binom = 1;
                    for (long j = 0; j <= nu; ++j) {
                        const IntegerOrePoly fx = f * IntegerOrePoly::monomial(1, nu - j, 0);
                        const S term = S::x(j) * span_element(ctx, fx)[c];
                        expanded = (j % 2) ? expanded - term.scaled(Rational(binom)) : expanded + term.scaled(Rational(binom));
                        binom = binom * (nu - j) / (j + 1);
                    }
                    CHECK(nfold_commutator_x(g[c], nu) == expanded);
                }
            }
        }
    }

    TEST_CASE("augmented witness search")
    {
        const auto p = problem(WitnessKind::augmented, d, {one});
        check_found(p, 2, "x");
        CHECK(witness_search(p, 0, P).status == WitnessStatus::bound_exhausted);
        // f = 0 leaves [0, 1] unreached.
        CHECK(spans_free_module(witness_presentation(p, IntegerOrePoly()), P) == Verdict::no);
        check_found(problem(WitnessKind::augmented, S::constant(Rational(2)), {one}), 0, "0");

        const auto again = witness_search(p, 2, P);
        const auto first = witness_search(p, 2, P);
        CHECK(again.f == first.f);
        CHECK(again.candidates_tried == first.candidates_tried);
    }

    TEST_CASE("module-extension witnesses")
    {
        const S zero;
        check_found(problem(WitnessKind::module_extension, one, {one}, {{d}}), 3, "1");
        check_found(problem(WitnessKind::module_extension, one, {one, x}, {{d, zero}, {zero, d}}), 3, "1");
        check_found(problem(WitnessKind::module_extension, d, {one}, {{d * d}}), 3);
        check_found(problem(WitnessKind::module_extension, d, {x}, {{one}}), 3, "0");
        check_found(problem(WitnessKind::module_extension, one, {one, one}, {{one, zero}}), 3, "1");
    }

    TEST_CASE("right-multiple witnesses")
    {
        check_found(problem(WitnessKind::right_multiple, d, {one}), 3, "x");
        check_found(problem(WitnessKind::right_multiple, d, {x}), 3, "1");
        check_found(problem(WitnessKind::right_multiple, S::constant(Rational(5)), {d}), 3, "0");
        check_found(problem(WitnessKind::right_multiple, d * d, {one}), 3);
        check_found(problem(WitnessKind::right_multiple, d, {x, one + x}), 3);
    }

    TEST_CASE("candidate enumeration")
    {
        const auto c0 = witness_candidates(0);
        REQUIRE(c0.size() == 1);
        CHECK(c0[0].is_zero());
        const auto c2 = witness_candidates(2);
        CHECK(c2[0].is_zero());
        for (const auto& f : c2) {
            CHECK(f.x_degree() <= 2);
            CHECK(f.d_degree() <= 2);
            CHECK(f.height() <= 2);
        }
        CHECK(witness_candidates(2) == c2);
    }

    TEST_CASE("multiplier verifier")
    {
        auto r = verify_multiplier(ore("x^2"), x, {d}, P);
        REQUIRE(r.size() == 1);
        CHECK(r[0].verdict == Verdict::yes);
        CHECK(r[0].quotient == ore("x*d - 1"));
        r = verify_multiplier(x, x, {d}, P);
        CHECK(r[0].verdict == Verdict::no);
        CHECK(r[0].quotient == ore("d - x^-1"));
        const S q = ore("x*d + 3");
        r = verify_multiplier(ore("d + x"), q, {q}, P);
        CHECK(r[0].verdict == Verdict::yes);
        CHECK(r[0].quotient == ore("d + x"));
    }

    TEST_CASE("principal generators")
    {
        auto g = principal_generator<Rational>({d * d, x * d}, P);
        CHECK(g.generator == d);
        g = principal_generator<Rational>({d, x}, P);
        CHECK(g.generator == one);
        g = principal_generator<Rational>({ore("2*x*d + 4")}, P);
        CHECK(g.generator == ore("d + 2*x^-1"));
        CHECK(g.coefficients[0] * ore("2*x*d + 4") == g.generator);
    }

    TEST_CASE("two-generation verifier")
    {
        const S zero;
        auto t = verify_two_generation(d, x, one, zero, zero, P);
        CHECK(t.verdict == Verdict::yes);
        CHECK(t.gcrd == one);
        t = verify_two_generation(d, d, x * d, zero, zero, P);
        CHECK(t.verdict == Verdict::yes);
        CHECK(t.gcrd == d);
        const S a = ore("x*d^2 + 1");
        CHECK(verify_two_generation(a, ore("d + x"), a, zero, zero, P).verdict == Verdict::yes);
        CHECK(verify_two_generation(d * d, d * d, d, zero, zero, P).verdict == Verdict::no);
    }
}
