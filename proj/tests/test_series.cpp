#include "hookenum/motzkin.hpp"
#include "hookenum/series.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hookenum;

namespace {

TruncatedSeries random_series(int order, bool unit_constant)
{
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<Rational> v;
    for (int i = 0; i < order; ++i) {
        v.emplace_back(d(testsupport::rng()));
    }
    if (unit_constant) {
        v[0] = 1;
    } else if (v[0] == 0) {
        v[0] = 3;
    }
    return TruncatedSeries(order, std::move(v));
}

std::vector<Count> counts(std::initializer_list<long> xs)
{
    return std::vector<Count>(xs.begin(), xs.end());
}

} // namespace

TEST(Mul, Examples)
{
    const auto a = TruncatedSeries::from_ints(5, {1, 1});
    const auto b = TruncatedSeries::from_ints(5, {1, -1});
    EXPECT_EQ(ts_mul(a, b), TruncatedSeries::from_ints(5, {1, 0, -1}));
    EXPECT_TRUE(ts_mul(a, TruncatedSeries(5, {})).is_zero());
    EXPECT_EQ(ts_mul(a, TruncatedSeries::from_ints(3, {1})).order(), 3);
}

TEST(Mul, MotzkinFunctionalEquation)
{
    const int order = 20;
    const TruncatedSeries m = named_gf(NamedGf::motzkin, order);
    const TruncatedSeries x = TruncatedSeries::from_ints(order, {0, 1});
    const TruncatedSeries x2 = TruncatedSeries::from_ints(order, {0, 0, 1});
    const TruncatedSeries rhs = x2 * m * m + x * m + TruncatedSeries::constant(order, 1);
    EXPECT_EQ(rhs, m);
}

TEST(Div, Examples)
{
    const auto ones = TruncatedSeries::from_ints(10, {1}) / TruncatedSeries::from_ints(10, {1, -1});
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(ones[i], 1);
    }
    const auto q = named_gf(NamedGf::thm_132_321, 41).integer_coeffs();
    EXPECT_EQ(std::vector<Count>(q.begin(), q.begin() + 5), counts({1, 1, 1, 2, 5}));
    for (int n = 1; n <= 40; ++n) {
        EXPECT_EQ(q[n], closed_form_132_321(n)) << n;
    }
    EXPECT_THROW(ts_div(ones, TruncatedSeries::from_ints(10, {0, 1})), division_error);
}

TEST(Div, RandomInverse)
{
    for (int trial = 0; trial < 20; ++trial) {
        const TruncatedSeries a = random_series(30, false);
        const TruncatedSeries b = random_series(30, false);
        EXPECT_EQ(ts_mul(ts_div(a, b), b), a);
        const TruncatedSeries c = random_series(64, false);
        const TruncatedSeries e = random_series(64, false);
        EXPECT_EQ(ts_div(ts_mul(c, e), e), c);
    }
}

TEST(Sqrt, Examples)
{
    const auto s = ts_sqrt(TruncatedSeries::from_ints(12, {1, -2, -3}));
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[1], -1);
    EXPECT_EQ(s[2], -2);
    EXPECT_EQ(ts_mul(s, s), TruncatedSeries::from_ints(12, {1, -2, -3}));
    EXPECT_EQ(ts_sqrt(TruncatedSeries::from_ints(6, {1})), TruncatedSeries::from_ints(6, {1}));
    const auto r = TruncatedSeries::from_ints(30, {1, -4, 4, -4, 4});
    EXPECT_EQ(ts_mul(ts_sqrt(r), ts_sqrt(r)), r);
    EXPECT_THROW(ts_sqrt(TruncatedSeries::from_ints(4, {4, 1})), invalid_input);
    EXPECT_THROW(ts_sqrt(TruncatedSeries::from_ints(4, {0, 1})), invalid_input);
}

TEST(Sqrt, RandomSquares)
{
    for (int order : {8, 30, 64}) {
        for (int trial = 0; trial < 5; ++trial) {
            const TruncatedSeries a = random_series(order, true);
            const TruncatedSeries s = ts_sqrt(a);
            EXPECT_EQ(s[0], 1);
            EXPECT_EQ(ts_mul(s, s), a);
        }
    }
}

TEST(Shift, DownRequiresVanishingHead)
{
    const auto a = TruncatedSeries::from_ints(5, {0, 0, 3, 4});
    EXPECT_EQ(a.shift_down(2), TruncatedSeries::from_ints(3, {3, 4}));
    EXPECT_THROW(a.shift_down(3), division_error);
    EXPECT_EQ(a.shift_down(2).shift_up(2).truncate(3), TruncatedSeries::from_ints(3, {0, 0, 3}));
}

TEST(NamedGf, Motzkin)
{
    const auto m = named_gf(NamedGf::motzkin, 15).integer_coeffs();
    EXPECT_EQ(std::vector<Count>(m.begin(), m.begin() + 7), counts({1, 1, 2, 4, 9, 21, 51}));
    for (int n = 0; n <= 14; ++n) {
        EXPECT_EQ(m[n], Count(all_paths(n).size())) << n;
    }
}

TEST(NamedGf, RecurrencesToForty)
{
    const auto a = named_gf(NamedGf::thm_231_321, 41).integer_coeffs();
    const auto b = named_gf(NamedGf::thm_231_1243, 41).integer_coeffs();
    EXPECT_EQ(a, av231_321_sequence(40));
    EXPECT_EQ(b, av231_1243_sequence(40));
}

TEST(NamedGf, ConjugateRewriteMatchesDirectQuotient)
{
    // 2x^2 / (3x - 1 + s): cancel the common factor x before dividing.
    const int order = 30;
    const TruncatedSeries s = ts_sqrt(IntPolynomial{1, -2, -3}.as_series(order + 1));
    const TruncatedSeries den = (IntPolynomial{-1, 3}.as_series(order + 1) + s).shift_down(1);
    const TruncatedSeries direct = ts_div(IntPolynomial{0, 2}.as_series(order), den);
    EXPECT_EQ(TruncatedSeries::constant(order, 1) + direct, named_gf(NamedGf::thm_231_1243, order));
}

TEST(NamedGf, ThreePatternsAndConjectureAgainstBruteForce)
{
    const auto prop = named_gf(NamedGf::prop_231_312_321, 10).integer_coeffs();
    const auto conj = named_gf(NamedGf::conj_132_3241, 10).integer_coeffs();
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(prop[n], count_vhcs_of_class(n, parse_patterns("231,312,321"))) << n;
        EXPECT_EQ(conj[n], count_vhcs_of_class(n, parse_patterns("132,3241"))) << n;
        EXPECT_EQ(conj[n], count_vhcs_of_class(n, parse_patterns("231,2143"))) << n;
    }
}

TEST(NamedGf, ParseNames)
{
    EXPECT_EQ(parse_named_gf("motzkin"), NamedGf::motzkin);
    EXPECT_THROW(parse_named_gf("nope"), invalid_input);
}

TEST(QResidual, VanishesToThirty)
{
    EXPECT_TRUE(q_residual(30).is_zero());
    EXPECT_EQ(q_residual(30).order(), 30);
    EXPECT_TRUE(q_residual(1).is_zero());
}

TEST(QResidual, DetectsAPerturbedCoefficient)
{
    for (int k : {2, 5, 11}) {
        std::vector<Count> v = av231_sequence(29);
        v[k] += 1;
        EXPECT_FALSE(q_evaluate(TruncatedSeries::from_counts(30, v)).is_zero()) << k;
    }
}

TEST(RealRoot, Constants)
{
    const Rational tol(1, 1000000000);
    const RootBracket rho = real_root(rho_polynomial(), 4, 5, tol);
    const RootBracket beta = real_root(beta_polynomial(), Rational(7, 10), Rational(9, 10), tol);
    EXPECT_LE(rho.hi - rho.lo, tol);
    EXPECT_NEAR(to_double(rho.mid()), 4.658905, 5e-7);
    EXPECT_NEAR(to_double(beta.mid()), 0.805810, 5e-7);
    const RootBracket one = real_root(IntPolynomial{-1, 1}, 0, 2, tol);
    EXPECT_EQ(one.mid(), 1);
    EXPECT_THROW(real_root(IntPolynomial{1, 0, 1}, -1, 1, tol), invalid_input);
}

TEST(Asymptotics, RatioApproachesRho)
{
    const AsymptoticReport rep = asymptotic_ratio_check(100);
    EXPECT_NEAR(rep.rho, 4.658905, 5e-7);
    EXPECT_LT(rep.deviation_at_max, 0.04);
    EXPECT_LT(rep.deviation_at_max, rep.deviation_at_half);
    EXPECT_TRUE(rep.ok());
}
