// Foundation tests: double-double arithmetic, rationals, continued
// fractions, bigint, and LLL shortness on hand-checkable lattices.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "onesided/bigint.hpp"
#include "onesided/dd.hpp"
#include "onesided/lattice.hpp"
#include "onesided/rational.hpp"
#include "oracle.hpp"

using namespace onesided;

TEST_CASE("dd basic field ops against long double") {
    DD a = dd_from_string("0.41421356237309504880168872420969807857");
    DD b = dd_from_string("0.73205080756887729352744634150587236694");
    long double la = 0.41421356237309504880168872420969807857L;
    long double lb = 0.73205080756887729352744634150587236694L;

    CHECK(std::fabs(static_cast<double>((a + b).to_double() - static_cast<double>(la + lb))) < 1e-15);
    CHECK(std::fabs((a * b).to_double() - static_cast<double>(la * lb)) < 1e-15);
    CHECK(std::fabs((a / b).to_double() - static_cast<double>(la / lb)) < 1e-15);

    // the low word must carry real information: (sqrt2-1)+(2-sqrt2) == 1
    DD c = dd_from_string("0.58578643762690495119831127579030192143");
    DD one = a + c;
    CHECK(std::fabs(one.hi - 1.0) < 1e-31);
    CHECK(std::fabs(one.lo) < 1e-31);
}

TEST_CASE("dd floor and mod1") {
    CHECK(dd_floor(DD(2.75)).to_double() == 2.0);
    CHECK(dd_floor(DD(-0.25)).to_double() == -1.0);
    CHECK(dd_floor(DD(3.0)).to_double() == 3.0);
    DD x = dd_from_string("5.25");
    CHECK(dd_mod1(x).to_double() == doctest::Approx(0.25).epsilon(1e-30));
    DD y = dd_from_string("-0.25");
    CHECK(dd_mod1(y).to_double() == doctest::Approx(0.75).epsilon(1e-30));
    CHECK(dd_dist_to_int(DD(0.75)).to_double() == doctest::Approx(0.25));
}

TEST_CASE("dd parse round-trips through scientific notation") {
    CHECK(dd_from_string("1e-3").to_double() == doctest::Approx(0.001).epsilon(1e-16));
    CHECK(dd_from_string("-2.5E2").to_double() == doctest::Approx(-250.0));
    CHECK(dd_from_string("0.5").to_double() == 0.5);
    CHECK_THROWS_AS(dd_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(dd_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(dd_from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("dd trig against long double oracle") {
    // random fractions plus the spec-level constants
    auto rng = oracle::rng(42);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double x = uni(rng);
        DD s, c;
        dd_sincos2pi(DD(x), s, c);
        CHECK(std::fabs(c.to_double() - static_cast<double>(oracle::cos2pi_ld(x))) < 2e-15);
        CHECK(std::fabs(s.to_double() - static_cast<double>(oracle::sin2pi_ld(x))) < 2e-15);
    }
    // k*alpha reduction at k = 1e9 must keep >= 10 significant digits:
    // compare against the same product done in __float128-free long double
    DD alpha = dd_from_string("0.41421356237309504880168872420969807857");
    std::int64_t k = 1000000007;
    DD reduced = dd_mod1(alpha * dd_from_int(k));
    long double lred = 0.41421356237309504880168872420969807857L * k;
    lred -= std::floor(lred);
    CHECK(std::fabs(reduced.to_double() - static_cast<double>(lred)) < 1e-10);
}

TEST_CASE("rational reduction, mod1, parsing") {
    Rational r(6, 4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);
    CHECK((-r).mod1() == Rational(1, 2));
    CHECK(Rational(7, 5).mod1() == Rational(2, 5));
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK(Rational::parse("-2.5") == Rational(-5, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("checked_lcm") {
    CHECK(checked_lcm(4, 6) == 12);
    CHECK(checked_lcm(5, 7) == 35);
    CHECK_THROWS_AS(checked_lcm(INT64_C(1) << 40, (INT64_C(1) << 40) + 1), std::overflow_error);
}

TEST_CASE("best_rational recovers planted fractions and rejects irrationals") {
    DD third = dd_from_int(1) / dd_from_int(3);
    auto a = best_rational(third, 50);
    CHECK(a.p == 1);
    CHECK(a.q == 3);
    CHECK(std::fabs(a.error) < 1e-30);

    DD x = dd_from_string("0.414213562373095048801688724209698");
    auto b = best_rational(x, 1000);
    // convergents of sqrt2-1 with q <= 1000: 408/985
    CHECK(b.q == 985);
    CHECK(b.p == 408);
    CHECK(std::fabs(b.error) > 1e-7); // genuinely irrational: no tiny error
}

TEST_CASE("bigint arithmetic") {
    BigInt a(INT64_C(123456789123456789));
    BigInt b(INT64_C(-987654321));
    CHECK((a + b).to_int64() == INT64_C(123456788135802468));
    CHECK((a - a).is_zero());
    BigInt p = a * a;
    CHECK(std::fabs(static_cast<double>(p.to_long_double()) - 1.5241578780673678e34) < 1e20);
    CHECK((-a).to_int64() == -INT64_C(123456789123456789));
    CHECK(BigInt(5) < BigInt(7));
    CHECK(BigInt(-5) < BigInt(3));
    BigInt big = BigInt(1).shifted_left(100);
    CHECK(std::fabs(static_cast<double>(big.to_long_double()) - std::ldexp(1.0, 100)) < 1e15);
    CHECK_FALSE(big.fits_int64());
    CHECK(BigInt::from_scaled_double(0.5, 4).to_int64() == 8);
    CHECK(BigInt::from_scaled_double(-0.75, 2).to_int64() == -3);
}

TEST_CASE("lll finds the short vector in a planted lattice") {
    // rows (1, 0, N*x) / (0, 1, N*y) with 2x = y: short vector (2, -1, ~0)
    const std::int64_t N = INT64_C(1) << 40;
    LatticeBasis basis(2, std::vector<BigInt>(3));
    basis[0][0] = BigInt(1);
    basis[0][2] = BigInt(static_cast<std::int64_t>(0.2 * static_cast<double>(N)));
    basis[1][1] = BigInt(1);
    basis[1][2] = BigInt(static_cast<std::int64_t>(0.4 * static_cast<double>(N)));
    lll_reduce(basis);
    bool found = false;
    for (const auto& row : basis) {
        if (!row[0].fits_int64() || !row[1].fits_int64()) continue;
        std::int64_t c1 = row[0].to_int64(), c2 = row[1].to_int64();
        if ((c1 == 2 && c2 == -1) || (c1 == -2 && c2 == 1)) found = true;
    }
    CHECK(found);
}
