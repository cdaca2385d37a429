#include "harvest/special_functions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle_quadrature.hpp"


using harvest::mittag_leffler;
using harvest::SeriesControl;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("gamma matches factorials and closed forms") {
    CHECK(harvest::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(harvest::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(harvest::gamma(0.5) == doctest::Approx(kSqrtPi).epsilon(1e-13));
    CHECK(harvest::gamma(1.5) == doctest::Approx(kSqrtPi / 2.0).epsilon(1e-13));
    CHECK(harvest::gamma(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
}

TEST_CASE("gamma agrees with the quadrature oracle") {
    // the integral definition is the independent route
    CHECK(std::fabs(oracle::gamma_by_quadrature(1.4) - 0.887264) < 1e-6);
    for (double x : {0.7, 1.4, 2.3, 3.9, 6.5}) {
        const double reference = oracle::gamma_by_quadrature(x);
        CHECK(harvest::gamma(x) == doctest::Approx(reference).epsilon(1e-9));
    }
}

TEST_CASE("gamma recurrence holds across the domain") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        CHECK(harvest::gamma(x + 1.0) == doctest::Approx(x * harvest::gamma(x)).epsilon(1e-10));
    }
}

TEST_CASE("gamma tiny and huge arguments") {
    // 1/x pole on the left, overflow to +inf on the right
    CHECK(harvest::gamma(1e-8) == doctest::Approx(1e8).epsilon(1e-6));
    CHECK(harvest::gamma(171.0) == doctest::Approx(7.257415615307999e306).epsilon(1e-10));
    CHECK(std::isinf(harvest::gamma(200.0)));
}

TEST_CASE("gamma rejects non-positive and non-finite arguments") {
    CHECK_THROWS_AS(harvest::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(harvest::gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(harvest::gamma(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(harvest::gamma(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("mittag-leffler reproduces exponential identities") {
    // E_{1,1}(z) = e^z, E_{1,2}(z) = (e^z - 1)/z
    CHECK(mittag_leffler(1.0, 1.0, 1.0) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(mittag_leffler(1.0, 2.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(std::fabs(mittag_leffler(1.0, 1.0, 1.0) - 2.718282) < 1e-6);
    CHECK(std::fabs(mittag_leffler(1.0, 2.0, 1.0) - 1.718282) < 1e-6);
}

TEST_CASE("mittag-leffler at z = 0 is 1/Gamma(beta)") {
    CHECK(mittag_leffler(0.6, 1.4, 0.0) ==
          doctest::Approx(1.0 / harvest::gamma(1.4)).epsilon(1e-14));
    CHECK(std::fabs(mittag_leffler(0.6, 1.4, 0.0) - 1.12706049798603) < 1e-9);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double a = dist(rng);
        const double b = dist(rng);
        CHECK(mittag_leffler(a, b, 0.0) * harvest::gamma(b) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("mittag-leffler partial sums: E_{1,1.4}(0.1)") {
    // 1.21102010764 precomputed by summing the series in 40-digit
    // arithmetic until the terms dropped below 1e-30
    CHECK(mittag_leffler(1.0, 1.4, 0.1) ==
          doctest::Approx(1.21102010764).epsilon(1e-9));
}

TEST_CASE("mittag-leffler tracks exp on [-2, 2]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const double z = dist(rng);
        CHECK(std::fabs(mittag_leffler(1.0, 1.0, z) - std::exp(z)) <= 1e-10);
    }
}

TEST_CASE("tightening the tolerance moves the result less than the loose tolerance") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> zdist(-1.5, 1.5);
    std::uniform_real_distribution<double> adist(0.3, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double a = adist(rng);
        const double b = adist(rng);
        const double z = zdist(rng);
        const double loose = mittag_leffler(a, b, z, {1e-6, 200});
        const double tight = mittag_leffler(a, b, z, {1e-12, 200});
        CHECK(std::fabs(loose - tight) <= 1e-6);
    }
}

TEST_CASE("mittag-leffler error paths") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.0, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, 0.5, {-1.0, 200}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, 0.5, {1e-12, 0}),
                    std::invalid_argument);
    // series still far from converged after max_terms
    CHECK_THROWS_AS(mittag_leffler(0.3, 1.0, 5.0, {1e-12, 3}),
                    std::runtime_error);
}
