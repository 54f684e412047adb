// SPDX-License-Identifier: MIT

#include "mocktheta/numeric.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracle_support.hpp"

using namespace mocktheta;

namespace {

double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

TEST(HalfInt, ArithmeticAndParse) {
    EXPECT_EQ(HalfInt::parse("3").twice(), 6);
    EXPECT_EQ(HalfInt::parse("-2").twice(), -4);
    EXPECT_EQ(HalfInt::parse("1/2").twice(), 1);
    EXPECT_EQ(HalfInt::parse("-7/2").twice(), -7);
    EXPECT_THROW(HalfInt::parse("1/3"), std::invalid_argument);
    EXPECT_THROW(HalfInt::parse("x"), std::invalid_argument);
    EXPECT_THROW(HalfInt::parse("1.5"), std::invalid_argument);

    HalfInt a = HalfInt::parse("3/2"), b = HalfInt::whole(2);
    EXPECT_EQ((a + b).twice(), 7);
    EXPECT_EQ((a - b).twice(), -1);
    EXPECT_EQ((-a).twice(), -3);
    EXPECT_TRUE(b.is_integer());
    EXPECT_FALSE(a.is_integer());
    EXPECT_EQ(a.str(), "3/2");
    EXPECT_EQ((-a).str(), "-3/2");
    EXPECT_EQ(b.str(), "2");
    EXPECT_DOUBLE_EQ(a.value(), 1.5);

    EXPECT_TRUE(HalfInt::product_is_integer(HalfInt::half(), HalfInt::whole(4)));
    EXPECT_TRUE(HalfInt::product_is_integer(HalfInt::whole(3), HalfInt::whole(2)));
    EXPECT_FALSE(HalfInt::product_is_integer(HalfInt::half(), HalfInt::whole(3)));
    EXPECT_FALSE(HalfInt::product_is_integer(HalfInt::half(), HalfInt::half()));
}

TEST(HalfInt, ReduceMod) {
    long long wraps = 0;
    // 7/2 mod 3 -> 1/2 with one wrap.
    HalfInt r = reduce_mod(HalfInt::parse("7/2"), HalfInt::whole(3), wraps);
    EXPECT_EQ(r.twice(), 1);
    EXPECT_EQ(wraps, 1);
    // -1/2 mod 1 -> 1/2 with wrap -1.
    r = reduce_mod(HalfInt::parse("-1/2"), HalfInt::whole(1), wraps);
    EXPECT_EQ(r.twice(), 1);
    EXPECT_EQ(wraps, -1);
    // 5 mod 2 -> 1, wraps 2.
    r = reduce_mod(HalfInt::whole(5), HalfInt::whole(2), wraps);
    EXPECT_EQ(r.twice(), 2);
    EXPECT_EQ(wraps, 2);
    // Already reduced.
    r = reduce_mod(HalfInt::half(), HalfInt::whole(4), wraps);
    EXPECT_EQ(r.twice(), 1);
    EXPECT_EQ(wraps, 0);
}

TEST(Rational, BasicsAndParse) {
    Rational r(4, 6);
    EXPECT_EQ(r.num, 2);
    EXPECT_EQ(r.den, 3);
    Rational s(3, -9);
    EXPECT_EQ(s.num, -1);
    EXPECT_EQ(s.den, 3);
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
    EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("2"), Rational(2, 1));
    EXPECT_EQ((Rational(1, 2) + Rational(1, 3)), Rational(5, 6));
    EXPECT_EQ((Rational(1, 2) * Rational(2, 3)), Rational(1, 3));
    EXPECT_EQ((Rational(1, 2) - Rational(1, 2)), Rational(0, 1));
    EXPECT_EQ(Rational(7, 2).str(), "7/2");
    EXPECT_EQ(Rational(-3, 1).str(), "-3");

    // a * m integrality: a = 1/3, m = 1 fails; a = 2, m = 1/2 passes.
    EXPECT_FALSE(product_is_integer(Rational(1, 3), HalfInt::whole(1)));
    EXPECT_TRUE(product_is_integer(Rational(2, 1), HalfInt::half()));
    EXPECT_TRUE(product_is_integer(Rational(1, 2), HalfInt::whole(2)));
    EXPECT_FALSE(product_is_integer(Rational(1, 2), HalfInt::whole(1)));
}

TEST(DomainPoint, FrameRoundTrip) {
    DomainPoint p({0.21, 1.31}, {0.1, 0.2}, {0.17, 0.05}, {0.0, 0.0});
    EXPECT_DOUBLE_EQ(p.x, 0.21);
    EXPECT_DOUBLE_EQ(p.y, 1.31);
    cplx v_back = p.a * p.tau - cplx(p.b, 0.0);
    EXPECT_LT(std::abs(v_back - p.v), 1e-14 * (1.0 + std::abs(p.v)));

    SplitMix rng(42);
    for (int i = 0; i < 200; ++i) {
        cplx tau{-0.4 + 0.8 * rng.next(), 0.8 + 1.7 * rng.next()};
        cplx v{-2.0 + 4.0 * rng.next(), -2.0 + 4.0 * rng.next()};
        DomainPoint q(tau, {0.0, 0.0}, v, {0.0, 0.0});
        cplx back = q.a * tau - cplx(q.b, 0.0);
        EXPECT_LT(std::abs(back - v), 1e-14 * (1.0 + std::abs(v)));
    }

    EXPECT_THROW(DomainPoint({0.0, -1.0}, {0, 0}, {0, 0}, {0, 0}), std::domain_error);
    EXPECT_THROW(DomainPoint({0.5, 0.0}, {0, 0}, {0, 0}, {0, 0}), std::domain_error);
}

TEST(PrincipalSqrt, BranchConvention) {
    EXPECT_LT(std::abs(principal_sqrt({4.0, 0.0}) - cplx(2.0, 0.0)), 1e-15);
    EXPECT_LT(std::abs(principal_sqrt({-1.0, 0.0}) - cplx(0.0, 1.0)), 1e-15);
    EXPECT_LT(std::abs(principal_sqrt({0.0, -2.0}) - cplx(1.0, -1.0)), 1e-15);
    EXPECT_EQ(principal_sqrt({0.0, 0.0}), cplx(0.0, 0.0));
    // Negative real axis with a negative-zero imaginary part still picks +i.
    EXPECT_LT(std::abs(principal_sqrt({-4.0, -0.0}) - cplx(0.0, 2.0)), 1e-15);

    SplitMix rng(7);
    for (int i = 0; i < 1000; ++i) {
        cplx w{-10.0 + 20.0 * rng.next(), -10.0 + 20.0 * rng.next()};
        cplx r = principal_sqrt(w);
        EXPECT_LT(std::abs(r * r - w), 1e-14 * (1.0 + std::abs(w)));
        // Argument of the result lies in (-pi/2, pi/2].
        EXPECT_TRUE(r.real() > 0.0 || (r.real() == 0.0 && r.imag() >= 0.0) ||
                    (r.real() == 0.0 && r.imag() == 0.0));
    }
}

TEST(GaussE, ValuesAgainstQuadratureOracle) {
    EXPECT_EQ(gauss_E(0.0), 0.0);
    EXPECT_NEAR(gauss_E(0.3), oracle::kE03, 1e-13);
    EXPECT_NEAR(gauss_E(1.0), oracle::kE10, 1e-13);
    EXPECT_NEAR(gauss_E(1.7), oracle::kE17, 1e-13);
    EXPECT_NEAR(gauss_E(2.0), oracle::kE20, 1e-13);
    EXPECT_NEAR(gauss_E(1.0), static_cast<double>(oracle::gauss_E_quad(1.0L)), 1e-13);

    for (int i = 0; i <= 120; ++i) {
        double x = -3.0 + 0.05 * i;
        EXPECT_NEAR(gauss_E(x), static_cast<double>(oracle::gauss_E_quad(x)), 1e-13)
            << "x = " << x;
    }
}

TEST(GaussE, OddMonotoneBounded) {
    for (double x : {0.3, 0.7, 1.3, 1.7, 2.9}) {
        EXPECT_DOUBLE_EQ(gauss_E(x), -gauss_E(-x));
        EXPECT_LT(std::abs(gauss_E(x)), 1.0);
    }
    // Strictly increasing where the values are resolvable in doubles; the
    // tails saturate at +-1 beyond |x| ~ 3.5.
    double prev = gauss_E(-3.0);
    for (int i = 1; i <= 60; ++i) {
        double cur = gauss_E(-3.0 + 0.1 * i);
        EXPECT_GT(cur, prev);
        prev = cur;
    }
    EXPECT_GT(gauss_E(5.0), 1.0 - 1e-10);
    EXPECT_LE(std::abs(gauss_E(8.0)), 1.0);
    EXPECT_THROW(gauss_E(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    EXPECT_THROW(gauss_E(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(GaussTailScaled, ValuesAndStability) {
    EXPECT_DOUBLE_EQ(gauss_tail_scaled(0.0), 1.0);
    EXPECT_NEAR(gauss_tail_scaled(0.3), oracle::kTail03, 1e-13);
    EXPECT_NEAR(gauss_tail_scaled(1.0), oracle::kTail10, 1e-13);
    EXPECT_NEAR(gauss_tail_scaled(2.0), oracle::kTail20, 1e-13);
    EXPECT_NEAR(gauss_tail_scaled(3.0), oracle::kTail30, 1e-13);
    EXPECT_NEAR(gauss_tail_scaled(12.0), oracle::kTail120, 1e-14);
    EXPECT_NEAR(gauss_tail_scaled(30.0), oracle::kTail300, 1e-14);
    EXPECT_NEAR(gauss_tail_scaled(100.0), oracle::kTail1000, 1e-15);

    // Relative error < 1e-12 against the continued-fraction oracle.
    for (int i = 0; i <= 200; ++i) {
        double x = 0.05 * i + 0.01;
        double got = gauss_tail_scaled(x);
        double want = static_cast<double>(oracle::gauss_tail_scaled_ref(x));
        EXPECT_LT(std::abs(got / want - 1.0), 1e-12) << "x = " << x;
    }

    // No overflow where naive exp(pi x^2) would blow up.
    EXPECT_TRUE(std::isfinite(gauss_tail_scaled(30.0)));
    EXPECT_TRUE(std::isfinite(gauss_tail_scaled(5000.0)));

    // Monotone decreasing.
    double prev = gauss_tail_scaled(0.0);
    for (int i = 1; i <= 100; ++i) {
        double cur = gauss_tail_scaled(0.25 * i);
        EXPECT_LT(cur, prev);
        prev = cur;
    }

    EXPECT_THROW(gauss_tail_scaled(-0.1), std::domain_error);
    EXPECT_THROW(gauss_tail_scaled(std::numeric_limits<double>::quiet_NaN()),
                 std::domain_error);
}

TEST(GaussTailScaled, ComplementIdentity) {
    // gauss_tail_scaled(x) e^(-pi x^2) + gauss_E(x) = 1 on [0, 5].
    for (int i = 0; i <= 100; ++i) {
        double x = 0.05 * i;
        double lhs = gauss_tail_scaled(x) * std::exp(-M_PI * x * x) + gauss_E(x);
        EXPECT_NEAR(lhs, 1.0, 1e-12) << "x = " << x;
    }
    // Cross-check at x = 2 against the quadrature oracle at long-double scale.
    long double diff = 1.0L - oracle::gauss_E_quad(2.0L);
    long double scaled = expl(4.0L * 3.14159265358979323846L) * diff;
    EXPECT_NEAR(gauss_tail_scaled(2.0), static_cast<double>(scaled), 1e-9);
}

TEST(DedekindEta, ValuesAndTail) {
    Truncation tr;
    Evaluated e = dedekind_eta({0.0, 1.0}, tr);
    EXPECT_LT(std::abs(e.value - oracle::kEtaAtI), 1e-15);
    e = dedekind_eta({0.0, 2.0}, tr);
    EXPECT_LT(std::abs(e.value - oracle::kEtaAt2I), 1e-15);
    e = dedekind_eta({0.3, 1.7}, tr);
    EXPECT_LT(std::abs(e.value - oracle::kEtaAt0317), 1e-15);

    // |eta(tau + 1)| = |eta(tau)|.
    Evaluated a = dedekind_eta({0.0, 1.0}, tr), b = dedekind_eta({1.0, 1.0}, tr);
    EXPECT_NEAR(std::abs(a.value), std::abs(b.value), 1e-15);

    // tau = 10i: leading factor dominates utterly.
    Evaluated c = dedekind_eta({0.0, 10.0}, tr);
    EXPECT_LT(std::abs(c.value / std::exp(-20.0 * M_PI / 24.0) - 1.0), 1e-15);

    // Truncation N vs N + 50 agree within the reported tail bound.
    Truncation t1;
    t1.eta_terms = 12;
    Truncation t2;
    t2.eta_terms = 62;
    Evaluated lo = dedekind_eta({0.05, 0.8}, t1), hi = dedekind_eta({0.05, 0.8}, t2);
    EXPECT_LE(std::abs(lo.value - hi.value), lo.tail + 1e-18);
    EXPECT_GT(lo.tail, 0.0);

    // Long-double oracle agreement at an off-axis point.
    Evaluated d = dedekind_eta({0.21, 1.31}, tr);
    EXPECT_LT(rel_err(d.value, oracle::to_d(oracle::eta_ref({0.21L, 1.31L}))), 1e-14);

    EXPECT_THROW(dedekind_eta({0.0, -1.0}, tr), std::domain_error);
    EXPECT_THROW(dedekind_eta({0.5, 0.0}, tr), std::domain_error);
}

TEST(Truncation, Defaults) {
    Truncation tr;
    EXPECT_EQ(tr.series_halfwidth, 400);
    EXPECT_EQ(tr.eta_terms, 64);
    EXPECT_DOUBLE_EQ(tr.tail_tol, 1e-14);
}

TEST(SplitMix, DeterministicAndUniform) {
    SplitMix a(123), b(123);
    for (std::uint64_t k = 0; k < 64; ++k) {
        EXPECT_EQ(a.word(k), b.word(k));
        double u = a.uniform(k);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    SplitMix c(124);
    EXPECT_NE(a.word(0), c.word(0));
    // next() replays the counter sequence.
    SplitMix d(9), e(9);
    for (int i = 0; i < 10; ++i) EXPECT_DOUBLE_EQ(d.next(), e.uniform(i));
}

TEST(Expi2, BasicValues) {
    EXPECT_LT(std::abs(expi2({0.25, 0.0}) - cplx(0.0, 1.0)), 1e-15);
    EXPECT_LT(std::abs(expi2({0.5, 0.0}) - cplx(-1.0, 0.0)), 1e-15);
    // Decay for positive imaginary part: |e^(2 pi i (iY))| = e^(-2 pi Y).
    EXPECT_NEAR(std::abs(expi2({0.3, 2.0})), std::exp(-4.0 * M_PI), 1e-18);
    EXPECT_EQ(expi2({0.0, 1000.0}), cplx(0.0, 0.0));
}

}  // namespace
