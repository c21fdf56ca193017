#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "recoh/ensemble.hpp"

using namespace recoh;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct evaluation of the ensemble-average formulas with a library Gamma,
// independent of the factorial-ratio rewrite used by closed_form_mean.
// Safe away from poles: the Gamma arguments are half-integers.
double closed_form_via_tgamma(int a, int K) {
    const double sign = (K % 2 == 0) ? 1.0 : -1.0;
    double kfact = 1.0;
    for (int j = 2; j <= K; ++j) kfact *= j;
    const double pi32 = std::pow(kPi, 1.5);
    switch (a) {
        case 1:
            return sign * pi32 / (2.0 * kfact * std::tgamma(0.5 - K));
        case 2:
            return sign * pi32 * (13.0 - 22.0 * K) / (32.0 * kfact * std::tgamma(1.5 - K));
        default:
            return sign * pi32 * (433.0 - 936.0 * K + 428.0 * K * K) /
                   (512.0 * kfact * std::tgamma(2.5 - K));
    }
}

double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

TEST_CASE("closed_form_mean pinned values") {
    CHECK(closed_form_mean(1, 1) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    CHECK(closed_form_mean(1, 2) == doctest::Approx(3.0 * kPi / 16.0).epsilon(1e-14));
    CHECK(closed_form_mean(2, 1) == doctest::Approx(9.0 * kPi / 32.0).epsilon(1e-14));
    CHECK(closed_form_mean(2, 2) == doctest::Approx(31.0 * kPi / 128.0).epsilon(1e-14));
    CHECK(closed_form_mean(3, 1) == doctest::Approx(75.0 * kPi / 256.0).epsilon(1e-14));

    // decimal anchors
    CHECK(closed_form_mean(1, 1) == doctest::Approx(0.785398).epsilon(1e-6));
    CHECK(closed_form_mean(2, 1) == doctest::Approx(0.883573).epsilon(1e-6));
    CHECK(closed_form_mean(3, 1) == doctest::Approx(0.920388).epsilon(1e-6));
    CHECK(closed_form_mean(1, 2) == doctest::Approx(0.589049).epsilon(1e-6));
    CHECK(closed_form_mean(2, 2) == doctest::Approx(0.760854).epsilon(1e-6));
}

TEST_CASE("closed_form_mean agrees with a direct Gamma evaluation") {
    for (int a = 1; a <= 3; ++a)
        for (int K = 1; K <= 12; ++K)
            CHECK(closed_form_mean(a, K) ==
                  doctest::Approx(closed_form_via_tgamma(a, K)).epsilon(1e-10));
}

TEST_CASE("closed_form_mean range checks") {
    CHECK_THROWS_AS((void)closed_form_mean(4, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)closed_form_mean(0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)closed_form_mean(1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)closed_form_mean(1, 31), std::invalid_argument);
    CHECK(closed_form_mean(3, 30) > 0.0);
}

TEST_CASE("closed_form_mean structure over (a, K)") {
    for (int a = 1; a <= 3; ++a) {
        double prev = 2.0;
        for (int K = 1; K <= 10; ++K) {
            const double v = closed_form_mean(a, K);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
            CHECK(v < prev);  // strictly decreasing in K
            prev = v;
        }
    }
    for (int K = 1; K <= 10; ++K) {
        CHECK(closed_form_mean(1, K) <= closed_form_mean(2, K));
        CHECK(closed_form_mean(2, K) <= closed_form_mean(3, K));
    }
    // a = 1 simplification: (pi/2) binom(2K, K) / 4^K
    for (int K = 1; K <= 10; ++K)
        CHECK(std::abs(closed_form_mean(1, K) -
                       0.5 * kPi * binom(2 * K, K) / std::pow(4.0, K)) <= 1e-12);
}

TEST_CASE("monte_carlo_mean determinism and thread independence") {
    const auto a = monte_carlo_mean(1, 1, 100, 77);
    const auto b = monte_carlo_mean(1, 1, 100, 77);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    const auto seq = monte_carlo_mean(2, 2, 4000, 78, 1);
    const auto par = monte_carlo_mean(2, 2, 4000, 78, 4);
    CHECK(seq.mean == par.mean);
    CHECK(seq.std_error == par.std_error);

    CHECK_THROWS_AS((void)monte_carlo_mean(1, 1, 99, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)monte_carlo_mean(5, 1, 1000, 0), std::invalid_argument);
}

TEST_CASE("monte_carlo_mean lands near the closed forms") {
    struct Case {
        int a, K;
    };
    for (const Case c : {Case{1, 1}, Case{2, 1}, Case{2, 3}, Case{3, 2}}) {
        const auto est = monte_carlo_mean(c.a, c.K, 20000, 1234 + c.a * 10 + c.K);
        CHECK(est.std_error > 0.0);
        CHECK(std::abs(est.mean - closed_form_mean(c.a, c.K)) <= 5.0 * est.std_error);
    }
}

TEST_CASE("compare populates the report") {
    const EnsembleReport rep = compare(2, 4, 1000, 42);
    CHECK(rep.a == 2);
    CHECK(rep.K == 4);
    CHECK(rep.samples == 1000);
    CHECK(rep.seed == 42);
    CHECK(rep.closed_form == closed_form_mean(2, 4));
    CHECK(rep.z_score == (rep.mc_mean - rep.closed_form) / rep.mc_stderr);
    CHECK(rep.mc_stderr > 0.0);
}
