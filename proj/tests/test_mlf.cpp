#include <doctest.h>

#include "fbvp/error.hpp"
#include "fbvp/mlf.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using fbvp::mlf::mittag_leffler;

namespace {

struct Row {
    double alpha, beta, z, value;
};

constexpr Row kTable[] = {
#include FBVP_ML_TABLE
};

double scaled_error(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("matches the high-precision table") {
    double worst = 0.0;
    for (const auto& r : kTable) {
        const double got = mittag_leffler(r.alpha, r.beta, r.z);
        const double err = scaled_error(got, r.value);
        worst = std::max(worst, err);
        INFO("alpha=" << r.alpha << " beta=" << r.beta << " z=" << r.z);
        CHECK(err <= 1e-8);
    }
    MESSAGE("worst scaled error over " << std::size(kTable) << " points: " << worst);
}

TEST_CASE("known values") {
    CHECK(mittag_leffler(1.55, 1.0, -1.0) == doctest::Approx(0.40690424772202672739).epsilon(1e-13));
    CHECK(mittag_leffler(1.0, 1.0, 0.0) == 1.0);
    CHECK(mittag_leffler(1.5, 2.0, 0.0) == doctest::Approx(1.0));
    CHECK(mittag_leffler(1.5, 2.5, 0.0) == doctest::Approx(0.75225277806367504926).epsilon(1e-14));
}

TEST_CASE("alpha = 1/2 is a scaled complementary error function") {
    for (double x = 0.0; x <= 6.0; x += 0.125) {
        const double want = std::exp(x * x) * std::erfc(x);
        INFO("x=" << x);
        CHECK(std::abs(mittag_leffler(0.5, 1.0, -x) - want) <= 1e-9);
    }
    CHECK(mittag_leffler(0.5, 1.0, -1.0) == doctest::Approx(0.42758357615580700441).epsilon(1e-13));
}

TEST_CASE("elementary closed forms") {
    for (double z = -30.0; z <= 10.0; z += 0.37) {
        INFO("z=" << z);
        CHECK(scaled_error(mittag_leffler(1.0, 1.0, z), std::exp(z)) <= 1e-12);
        CHECK(scaled_error(mittag_leffler(1.0, 2.0, z), std::expm1(z) / z) <= 1e-12);
        CHECK(scaled_error(mittag_leffler(2.0, 1.0, -std::abs(z)), std::cos(std::sqrt(std::abs(z)))) <= 1e-12);
        if (z > 0.0) CHECK(scaled_error(mittag_leffler(2.0, 1.0, z), std::cosh(std::sqrt(z))) <= 1e-12);
    }
}

TEST_CASE("non-positive beta goes through the recurrence") {
    // E_{1,0}(z) = z e^z
    for (double z : {-5.0, -1.0, 0.5, 3.0}) {
        CHECK(mittag_leffler(1.0, 0.0, z) == doctest::Approx(z * std::exp(z)).epsilon(1e-12));
    }
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 1.0), fbvp::DomainError);
    CHECK_THROWS_AS(mittag_leffler(-1.0, 1.0, 1.0), fbvp::DomainError);
    CHECK_THROWS_AS(mittag_leffler(1.5, 1.0, std::numeric_limits<double>::quiet_NaN()), fbvp::DomainError);
    CHECK_THROWS_AS(mittag_leffler(1.5, std::numeric_limits<double>::infinity(), 1.0), fbvp::DomainError);
    CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, 800.0), fbvp::OverflowError);
}

TEST_CASE("gamma helpers") {
    using fbvp::mlf::log_gamma;
    using fbvp::mlf::reciprocal_gamma;
    CHECK(log_gamma(2.5) == doctest::Approx(0.28468287047291915963).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    CHECK(log_gamma(200.0) == doctest::Approx(std::lgamma(200.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), fbvp::DomainError);
    CHECK_THROWS_AS(log_gamma(-2.5), fbvp::DomainError);

    CHECK(reciprocal_gamma(2.5) == doctest::Approx(0.75225277806367504926).epsilon(1e-14));
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-3.0) == 0.0);
    CHECK(reciprocal_gamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK(reciprocal_gamma(250.0) == doctest::Approx(std::exp(-std::lgamma(250.0))).epsilon(1e-12));
}

TEST_CASE("asymptotic truncation is not fooled by near-zero 1/Gamma terms") {
    // beta - alpha k lands on a pole of Gamma for some k in each case
    CHECK(mittag_leffler(0.6, 1.6, -3.16) == doctest::Approx(0.2684642292186440994).epsilon(1e-12));
    CHECK(mittag_leffler(1.2, 2.2, -10.0) == doctest::Approx(0.10263983471258692089).epsilon(1e-12));
    CHECK(mittag_leffler(0.3, 0.8, -3.16) == doctest::Approx(0.15577244768310306301).epsilon(1e-12));
}

TEST_CASE("recurrence in beta holds off the tabulated grid") {
    double worst = 0.0;
    for (double a : {0.3, 0.6, 0.9, 1.2, 1.55, 1.8, 2.0}) {
        for (double b : {0.25, 0.5, 1.0}) {
            for (double z = -30.0; z <= 5.0; z += 0.61) {
                const double rhs = z * mittag_leffler(a, a + b, z) + fbvp::mlf::reciprocal_gamma(b);
                worst = std::max(worst, scaled_error(mittag_leffler(a, b, z), rhs));
            }
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("overflow is reported, not returned as a number") {
    CHECK_THROWS_AS(mittag_leffler(0.3, 0.5, 9.0), fbvp::OverflowError);
    CHECK(std::isfinite(mittag_leffler(0.3, 0.5, 5.0)));
}
