// spectrum-core tests: validation, evaluation, closed-form partial sums,
// collapse, and the structural invariants (realness, periodicity,
// certificate bounds).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "onesided/spectrum.hpp"
#include "oracle.hpp"

using namespace onesided;

namespace {

const char* SQRT2M1 = "0.41421356237309504880168872420969807857";
const char* SQRT3M1 = "0.73205080756887729352744634150587236694";

BasisDecl basis_sqrt2() {
    BasisDecl b;
    b.labels = {"sqrt2m1"};
    b.values = {dd_from_string(SQRT2M1)};
    return b;
}

SpectrumConfig two_node(Rational a1, Rational a2) {
    SpectrumConfig cfg;
    cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(a1)});
    cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(a2)});
    return cfg;
}

} // namespace

TEST_CASE("validate_config: conjugate pair accepted") {
    SpectrumConfig cfg = two_node(Rational(1, 5), Rational(4, 5));
    ValidationReport rep = validate_config(cfg);
    CHECK(rep.structural_ok);
    CHECK(rep.conjugate_closed);
    CHECK(rep.no_unit_node);
    CHECK(rep.all_distinct);
    CHECK(rep.thm1_hypotheses());
}

TEST_CASE("validate_config: asymmetric singleton fails closure") {
    SpectrumConfig cfg;
    cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))});
    ValidationReport rep = validate_config(cfg);
    CHECK(rep.structural_ok);
    CHECK_FALSE(rep.conjugate_closed);
    CHECK_FALSE(rep.thm1_hypotheses());
}

TEST_CASE("validate_config: z = 1 nodes are flagged") {
    SpectrumConfig cfg = two_node(Rational(0), Rational(1, 2));
    ValidationReport rep = validate_config(cfg);
    CHECK_FALSE(rep.no_unit_node);
    CHECK_FALSE(rep.thm1_hypotheses());
}

TEST_CASE("validate_config: structural rejects") {
    SpectrumConfig empty;
    CHECK_FALSE(validate_config(empty).structural_ok);

    SpectrumConfig mismatched;
    mismatched.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3), {1, 2})});
    CHECK_FALSE(validate_config(mismatched).structural_ok); // coeffs but no basis
}

TEST_CASE("angle_value examples") {
    BasisDecl basis = basis_sqrt2();
    CHECK(angle_value(Angle::exact(Rational(1, 4)), basis).to_double() == 0.25);
    CHECK(angle_value(Angle::exact(Rational(0), {1}), basis).to_double() ==
          doctest::Approx(0.41421356237309504880).epsilon(1e-15));
    // (1/3 + 2*(sqrt2-1)) mod 1, frozen from a 60-digit decimal oracle
    CHECK(angle_value(Angle::exact(Rational(1, 3), {2}), basis).to_double() ==
          doctest::Approx(0.16176045807952343094).epsilon(1e-14));
    CHECK_THROWS_AS(angle_value(Angle::exact(Rational(0), {1, 1}), basis), std::invalid_argument);
}

TEST_CASE("eval_power_sum: tightness example values") {
    SpectrumConfig cfg = extremal_example(4);
    CHECK(eval_power_sum(cfg, 5) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(eval_power_sum(cfg, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eval_power_sum(cfg, 10) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(eval_power_sum(cfg, 7) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("eval_power_sum: quarter pair and irrational pair") {
    SpectrumConfig quarter = two_node(Rational(1, 4), Rational(3, 4));
    CHECK(eval_power_sum(quarter, 2) == doctest::Approx(-2.0).epsilon(1e-12));

    SpectrumConfig irr;
    irr.basis = basis_sqrt2();
    irr.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(0), {1})});
    irr.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(0), {-1})});
    // 2*cos(2*pi*sqrt(2)), frozen from the decimal Taylor oracle
    CHECK(eval_power_sum(irr, 1) == doctest::Approx(-1.7164323713376354).epsilon(1e-13));
    // long double cross-check
    CHECK(eval_power_sum(irr, 1) ==
          doctest::Approx(static_cast<double>(oracle::power_sum_ld(irr, 1))).epsilon(1e-13));
}

TEST_CASE("eval_power_sum: broken closure raises on imaginary residue") {
    SpectrumConfig bad;
    bad.nodes.push_back({Coefficient(Complex(0.0, 1.0)), Angle::exact(Rational(1, 3))});
    bad.nodes.push_back({Coefficient(Complex(0.0, 1.0)), Angle::exact(Rational(2, 3))});
    CHECK_THROWS_AS(eval_power_sum(bad, 1), std::domain_error);
}

TEST_CASE("eval_cosine_sum examples") {
    CosineConfig c1;
    c1.pairs.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 4))});
    CHECK(eval_cosine_sum(c1, 2.0) == doctest::Approx(-1.0).epsilon(1e-12));

    CosineConfig c2;
    c2.pairs.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 6))});
    c2.pairs.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))});
    CHECK(eval_cosine_sum(c2, 0.0) == doctest::Approx(2.0).epsilon(1e-12));

    // 3*cos(2*pi*(sqrt3-1)) via the angle 2-sqrt3 = -(sqrt3-1) mod 1, which
    // lands strictly inside (0, 1/2); frozen from the decimal oracle
    CosineConfig c3;
    c3.basis.labels = {"sqrt3m1"};
    c3.basis.values = {dd_from_string(SQRT3M1)};
    c3.pairs.push_back({Coefficient(Rational(3)), Angle::exact(Rational(0), {-1})});
    CHECK(validate_config(c3).structural_ok);
    CHECK(eval_cosine_sum(c3, 1.0) == doctest::Approx(-0.33761755572265872).epsilon(1e-12));
}

TEST_CASE("sigma1 closed form") {
    SpectrumConfig zeta = extremal_example(4);
    AveragingCertificate full_period = sigma1_closed_form(zeta, 0, 5);
    CHECK(std::abs(full_period.sigma1) < 1e-11); // 4 + 4*(-1) = 0 over a period
    CHECK(std::abs(full_period.sigma1) <= full_period.C1);

    SpectrumConfig quarter = two_node(Rational(1, 4), Rational(3, 4));
    AveragingCertificate k1 = sigma1_closed_form(quarter, 0, 1);
    CHECK(k1.sigma1.real() == doctest::Approx(2.0).epsilon(1e-12)); // s_0 = sum b

    SpectrumConfig third = two_node(Rational(1, 3), Rational(2, 3));
    AveragingCertificate c = sigma1_closed_form(third, 1, 2);
    auto direct = oracle::direct_sums(third, 1, 2);
    CHECK(c.sigma1.real() == doctest::Approx(static_cast<double>(direct.sigma1)).epsilon(1e-11));
    CHECK(c.sigma1.real() == doctest::Approx(-2.0).epsilon(1e-11));

    SpectrumConfig with_one = two_node(Rational(0), Rational(1, 2));
    CHECK_THROWS_AS(sigma1_closed_form(with_one, 0, 3), std::domain_error);
    CHECK_THROWS_AS(sigma1_closed_form(third, 0, 0), std::invalid_argument);
}

TEST_CASE("sigma2 closed form") {
    SpectrumConfig quarter = two_node(Rational(1, 4), Rational(3, 4));
    AveragingCertificate c = sigma2_closed_form(quarter, 0, 4);
    auto direct = oracle::direct_sums(quarter, 0, 4);
    CHECK(c.sigma2.real() == doctest::Approx(static_cast<double>(direct.sigma2)).epsilon(1e-11));
    CHECK(c.sigma2.real() == doctest::Approx(8.0).epsilon(1e-11));

    // K = 1, N = 0 reduces to s_0^2 = (sum b)^2
    AveragingCertificate c0 = sigma2_closed_form(quarter, 0, 1);
    CHECK(c0.sigma2.real() == doctest::Approx(4.0).epsilon(1e-11));

    SpectrumConfig zeta = extremal_example(4);
    AveragingCertificate cz = sigma2_closed_form(zeta, 0, 5);
    CHECK(cz.sigma2.real() == doctest::Approx(20.0).epsilon(1e-10)); // 16 + 4

    CHECK_THROWS_AS(sigma2_closed_form(quarter, 0, 0), std::invalid_argument);
    SpectrumConfig repeated;
    repeated.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))});
    repeated.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))});
    repeated.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(2, 3))});
    repeated.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(2, 3))});
    CHECK_THROWS_AS(sigma2_closed_form(repeated, 0, 3), std::domain_error);
}

TEST_CASE("closed forms match direct summation on random configs") {
    auto rng = oracle::rng(7);
    std::uniform_int_distribution<std::int64_t> Npick(0, 500), Kpick(1, 2000);
    for (int trial = 0; trial < 30; ++trial) {
        gen::SpectrumOptions opt;
        opt.max_pairs = trial % 2 ? 3 : 5;
        opt.float_angles = trial % 3 == 0;
        opt.allow_half_node = false;
        auto cfg = gen::random_spectrum(rng, opt);
        std::int64_t N = Npick(rng), K = Kpick(rng);
        AveragingCertificate cert = averaging_certificate(cfg, N, K);
        auto direct = oracle::direct_sums(cfg, N, K);
        double scale1 = std::max(1.0, std::fabs(static_cast<double>(direct.sigma1)));
        double scale2 = std::max(1.0, std::fabs(static_cast<double>(direct.sigma2)));
        CHECK(std::fabs(cert.sigma1.real() - static_cast<double>(direct.sigma1)) / scale1 < 1e-10);
        CHECK(std::fabs(cert.sigma2.real() - static_cast<double>(direct.sigma2)) / scale2 < 1e-10);
        // a-priori certificate bounds
        CHECK(std::abs(cert.sigma1) <= cert.C1 * (1.0 + 1e-9) + 1e-9);
        CHECK(std::fabs(cert.sigma2.real() - static_cast<double>(K) * cfg.sum_abs_b_sq()) <=
              cert.C2 * (1.0 + 1e-9) + 1e-9);
    }
}

TEST_CASE("realness invariant on random conjugate-closed configs") {
    auto rng = oracle::rng(11);
    std::uniform_int_distribution<std::int64_t> kpick(-100000, 100000);
    for (int trial = 0; trial < 20; ++trial) {
        gen::SpectrumOptions opt;
        opt.float_angles = trial % 2 == 0;
        auto cfg = gen::random_spectrum(rng, opt);
        for (int i = 0; i < 20; ++i) {
            Complex s = eval_power_sum_complex(cfg, kpick(rng));
            CHECK(std::fabs(s.imag()) < imag_tolerance(cfg));
        }
    }
}

TEST_CASE("periodicity for rational angles") {
    auto rng = oracle::rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        gen::SpectrumOptions opt;
        opt.max_pairs = 3;
        auto cfg = gen::random_spectrum(rng, opt);
        auto period = cfg.rational_period();
        REQUIRE(period.has_value());
        for (std::int64_t k = 1; k <= 20; ++k)
            CHECK(eval_power_sum(cfg, k) ==
                  doctest::Approx(eval_power_sum(cfg, k + *period)).epsilon(1e-11));
    }
}

TEST_CASE("collapse_repeats merges and conserves") {
    SpectrumConfig cfg;
    for (auto r : {Rational(1, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3)})
        cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(r)});
    SpectrumConfig merged = collapse_repeats(cfg);
    REQUIRE(merged.n() == 2);
    CHECK(*merged.nodes[0].b.exact == Rational(2));
    CHECK(*merged.nodes[1].b.exact == Rational(2));

    SpectrumConfig distinct = two_node(Rational(1, 5), Rational(4, 5));
    SpectrumConfig same = collapse_repeats(distinct);
    CHECK(same.n() == 2);

    SpectrumConfig mixed;
    std::int64_t bs[] = {1, 2, 1, 2};
    Rational as[] = {Rational(1, 5), Rational(1, 5), Rational(4, 5), Rational(4, 5)};
    for (int i = 0; i < 4; ++i) mixed.nodes.push_back({Coefficient(Rational(bs[i])), Angle::exact(as[i])});
    SpectrumConfig m2 = collapse_repeats(mixed);
    REQUIRE(m2.n() == 2);
    CHECK(*m2.nodes[0].b.exact == Rational(3));
    CHECK(*m2.nodes[1].b.exact == Rational(3));
    CHECK(m2.sum_abs_b() == doctest::Approx(6.0));        // conserved
    CHECK(m2.sum_abs_b_sq() == doctest::Approx(18.0));    // 10 -> 18, grew
    CHECK(mixed.sum_abs_b_sq() == doctest::Approx(10.0));

    SpectrumConfig bad;
    bad.nodes.push_back({Coefficient(Complex(0.0, 1.0)), Angle::exact(Rational(1, 3))});
    bad.nodes.push_back({Coefficient(Complex(0.0, -1.0)), Angle::exact(Rational(2, 3))});
    CHECK_THROWS_AS(collapse_repeats(bad), std::domain_error);
}

TEST_CASE("collapse conservation is exact in rational arithmetic") {
    auto rng = oracle::rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        SpectrumConfig cfg = gen::random_repeated_spectrum(rng);
        SpectrumConfig merged = collapse_repeats(cfg);
        Rational before(0), after(0);
        for (const auto& nd : cfg.nodes) before += *nd.b.exact;
        for (const auto& nd : merged.nodes) after += *nd.b.exact;
        CHECK(before == after);
        CHECK(merged.sum_abs_b_sq() >= cfg.sum_abs_b_sq() - 1e-12);
        CHECK(validate_config(merged).all_distinct);
    }
}

TEST_CASE("extremal_example shape") {
    SpectrumConfig n4 = extremal_example(4);
    REQUIRE(n4.n() == 4);
    for (std::int64_t j = 1; j <= 4; ++j)
        CHECK(n4.nodes[static_cast<std::size_t>(j - 1)].angle.rational() == Rational(j, 5));
    SpectrumConfig n1 = extremal_example(1);
    CHECK(n1.nodes[0].angle.is_half());
    CHECK_THROWS_AS(extremal_example(0), std::invalid_argument);
}

TEST_CASE("cosine <-> spectrum conversions agree pointwise") {
    CosineConfig cosine;
    cosine.pairs.push_back({Coefficient(Rational(2)), Angle::exact(Rational(1, 6))});
    cosine.pairs.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))});
    SpectrumConfig spec = to_spectrum(cosine);
    REQUIRE(spec.n() == 4);
    CHECK(validate_config(spec).conjugate_closed);
    for (std::int64_t k = 0; k <= 12; ++k)
        CHECK(eval_power_sum(spec, k) == doctest::Approx(eval_cosine_sum(cosine, k)).epsilon(1e-12));
    CosineConfig back = to_cosine(spec);
    REQUIRE(back.m() == 2);
    CHECK(*back.pairs[0].b.exact == Rational(2));
    CHECK(*back.pairs[1].b.exact == Rational(1));
}

TEST_CASE("high-precision evaluation agrees with the double path") {
    auto rng = oracle::rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        auto cfg = gen::random_spectrum(rng, {});
        for (std::int64_t k : {1, 999, 1000003}) {
            double fast = eval_power_sum(cfg, k);
            DD precise = eval_power_sum_hp(cfg, k);
            CHECK(fast == doctest::Approx(precise.to_double()).epsilon(1e-12));
        }
    }
}

TEST_CASE("pair view matches node evaluation") {
    auto rng = oracle::rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        auto cfg = gen::random_spectrum(rng, {});
        PairView view = build_pair_view(cfg);
        for (std::int64_t k : {1, 2, 3, 17, 1000, 99991}) {
            std::vector<DD> thetas;
            for (const auto& p : view.pairs) thetas.push_back(dd_mod1(p.alpha * dd_from_int(k)));
            CHECK(view.eval(thetas, k) == doctest::Approx(eval_power_sum(cfg, k)).epsilon(1e-10));
        }
    }
}
