#include "doctest.h"

#include "support.hpp"

#include "orekit/modlin.hpp"

using namespace orekit;
using namespace orekit::testing;

namespace {

const Precision P{16};

Poly1 monomial_poly(long e) { return Poly1{{e, Rational(1)}}; }

// c_j d^j -> c_j j!/(j-nu)! d^(j-nu), coefficientwise.
S d_derivative(const S& a, long nu)
{
    std::vector<L> c;
    for (long j = nu; j < a.size(); ++j) {
        Rational f = 1;
        for (long i = 0; i < nu; ++i) f *= Rational(j - i);
        c.push_back(a.coeff(j).scaled(f));
    }
    return S(c);
}

} // namespace

TEST_SUITE("ore")
{
    TEST_CASE("defining relation and small products")
    {
        CHECK(S::d() * S::x() == ore("x*d + 1"));
        CHECK(S::d(2) * S::x() == ore("x*d^2 + 2*d"));
        const S xd = ore("x*d");
        CHECK(xd * xd == ore("x^2*d^2 + x*d"));
    }

    TEST_CASE("products agree with the action on polynomials")
    {
        for (const char* a : {"d^2", "x*d", "x^2*d^3 - d + 4", "x^-1*d + x^3"})
            for (const char* b : {"x", "x*d^2 + 1", "d^2 - x^2"}) {
                const S A = ore(a), B = ore(b);
                for (long e = -2; e <= 5; ++e) CHECK(act(A * B, monomial_poly(e)) == act(A, act(B, monomial_poly(e))));
            }
    }

    TEST_CASE("apply to series")
    {
        const L x3 = L::monomial(Rational(1), 3);
        CHECK(apply_to_series(S::d(), x3) == L::monomial(Rational(3), 2));
        CHECK(apply_to_series(ore("x*d"), x3) == L::monomial(Rational(3), 3));
        const L f(0, {Rational(1), Rational(2), Rational(-1)}, 9);
        CHECK(apply_to_series(S::one(), f) == f);
    }

    TEST_CASE("x-commutators")
    {
        CHECK(nfold_commutator_x(S::d(3), 3) == S::constant(Rational(6)));
        CHECK(nfold_commutator_x(S::d(2), 3).is_exact_zero());
        CHECK(nfold_commutator_x(ore("x*d^2"), 2) == ore("2*x"));
    }

    TEST_CASE("d-commutators")
    {
        CHECK(nfold_commutator_d(ore("x^2"), 1) == ore("-2*x"));
        CHECK(nfold_commutator_d(ore("x^3"), 2) == ore("6*x"));
        CHECK(nfold_commutator_d(ore("7"), 3).is_exact_zero());
    }

    TEST_CASE("x-commutator is the formal d-derivative")
    {
        Rng rng(21);
        for (int i = 0; i < 40; ++i) {
            const S a = rng.ore_poly(rng.uniform(0, 6), 3, -2);
            for (long nu = 1; nu <= 7; ++nu) CHECK(nfold_commutator_x(a, nu) == d_derivative(a, nu));
        }
    }

    TEST_CASE("d-commutator on scalars is a signed derivative")
    {
        Rng rng(22);
        for (int i = 0; i < 20; ++i) {
            const L s = rng.laurent(-3, 5);
            for (long nu = 1; nu <= 4; ++nu) {
                const L want = nu % 2 ? -s.derivative(nu) : s.derivative(nu);
                CHECK(nfold_commutator_d(S(s), nu) == S(want));
            }
        }
    }

    TEST_CASE("Euclidean division examples")
    {
        auto qr = euclidean_divide(S::d(2), S::d(), P);
        CHECK(qr.quotient == S::d());
        CHECK(qr.remainder.is_exact_zero());

        qr = euclidean_divide(S::d(2), ore("x*d"), P);
        CHECK(qr.quotient == ore("x^-1*d - x^-2"));
        CHECK(qr.remainder.is_exact_zero());
        CHECK(qr.quotient * ore("x*d") == S::d(2));

        qr = euclidean_divide(S::x(), S::d(), P);
        CHECK(qr.quotient.is_exact_zero());
        CHECK(qr.remainder == S::x());

        CHECK_THROWS_AS(euclidean_divide(S::d(), S(L::zero(4)), P), PrecisionInsufficient);
    }

    TEST_CASE("monic normalization")
    {
        auto m = normalize_monic(ore("2*d"), P);
        CHECK(m.unit == L::constant(Rational(2)));
        CHECK(m.monic == S::d());

        m = normalize_monic(ore("x*d^2 + d"), P);
        CHECK(m.unit == L::monomial(Rational(1), 1));
        CHECK(m.monic == ore("d^2 + x^-1*d"));

        const S monic = ore("d^3 + x*d");
        m = normalize_monic(monic, P);
        CHECK(m.unit == L::constant(Rational(1)));
        CHECK(m.monic == monic);
    }

    TEST_CASE("gcrd examples")
    {
        CHECK(gcrd_bezout(S::d(2), S::d(), P).gcrd == S::d());
        CHECK(gcrd_bezout(ore("d + 1"), ore("d + 2"), P).gcrd == S::one());
        const auto g = gcrd_bezout(S::d(2), ore("x*d"), P);
        CHECK(g.gcrd == S::d());
        CHECK(g.u * S::d(2) + g.v * ore("x*d") == S::d());
    }

    TEST_CASE("lclm examples")
    {
        CHECK(lclm(S::d(), S::d(), P).lclm == S::d());
        const auto l = lclm(S::d(), ore("d - 1"), P);
        CHECK(l.lclm == ore("d^2 - d"));
        CHECK(l.s * S::d() == l.lclm);
        CHECK(l.t * ore("d - 1") == l.lclm);
        CHECK(lclm(ore("3*x*d + 1"), S::constant(Rational(5)), P).lclm == ore("d + 1/3*x^-1"));
    }

    TEST_CASE("random division invariant")
    {
        Rng rng(31);
        for (int i = 0; i < 60; ++i) {
            const S beta = rng.ore_poly(rng.uniform(0, 5), 3, -1);
            const S alpha = rng.ore_poly(rng.uniform(0, 3), 2, -1);
            const auto qr = euclidean_divide(beta, alpha, P);
            CHECK(qr.remainder.order() < alpha.order());
            const S back = qr.quotient * alpha + qr.remainder;
            CHECK(equal_mod(back, beta, qr.precision));
        }
    }

    TEST_CASE("random gcrd and lclm")
    {
        Rng rng(32);
        for (int i = 0; i < 30; ++i) {
            const S a = rng.ore_poly(rng.uniform(1, 3), 2), b = rng.ore_poly(rng.uniform(1, 3), 2);
            // A common right factor makes the gcrd nontrivial half the time.
            const S common = rng.coin() ? rng.ore_poly(1, 1) : S::one();
            const S A = a * common, B = b * common;
            const auto g = gcrd_bezout(A, B, Precision{24});
            const long lvl = 10;
            CHECK(equal_mod(g.u * A + g.v * B, g.gcrd, lvl));
            CHECK(g.gcrd.lc() == L::constant(Rational(1)));
            for (const S* x : {&A, &B}) {
                const auto qr = euclidean_divide(*x, g.gcrd, Precision{24});
                for (const auto& c : qr.remainder.coeffs()) CHECK(c.effective_valuation() >= lvl);
            }
            const auto l = lclm(A, B, Precision{24});
            CHECK(equal_mod(l.s * A, l.lclm, lvl));
            CHECK(equal_mod(l.t * B, l.lclm, lvl));
            CHECK(l.lclm.order() + g.gcrd.order() == A.order() + B.order());
        }
    }

    TEST_CASE("residues modulo S alpha have dimension ord(alpha)")
    {
        CHECK(colength(S::d(), P) == 1);
        CHECK(colength(ore("d^2 + x"), P) == 2);
        CHECK(colength(ore("3 + x"), P) == 0);

        Rng rng(33);
        for (int i = 0; i < 20; ++i) {
            const S alpha = rng.ore_poly(rng.uniform(0, 4), 2, -1);
            CHECK(colength(alpha, P) == alpha.order());
            // Every beta has a unique residue: beta and beta + s alpha reduce alike.
            const S beta = rng.ore_poly(rng.uniform(0, 5), 2);
            const S shift = rng.ore_poly(rng.uniform(0, 2), 2);
            const auto r1 = euclidean_divide(beta, alpha, P).remainder;
            const auto r2 = euclidean_divide(beta + shift * alpha, alpha, P).remainder;
            CHECK(equal_mod(r1, r2, 8));
        }
    }

    TEST_CASE("D_n products agree with the action on polynomials")
    {
        Rng rng(41);
        for (int i = 0; i < 30; ++i) {
            const int n = static_cast<int>(rng.uniform(1, 3));
            const long N = 10;
            const DiffOperator a = rng.diff_op(n, 3, 3, N, 3), b = rng.diff_op(n, 3, 3, N, 3);
            const DiffOperator ab = a * b;
            const PowerSeries f = rng.series(n, 6, N, 4);
            const long lvl = ab.precision() - 3;
            CHECK(truncate(act(ab, to_poly(f)), lvl) == truncate(act(a, act(b, to_poly(f))), lvl));
            CHECK(equal_mod(apply_to_series(ab, f), apply_to_series(a, apply_to_series(b, f)), lvl));
        }
        CHECK(dop("d1*x1", 2, 8) == dop("x1*d1 + 1", 2, 8));
    }
}
