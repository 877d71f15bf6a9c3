#include <doctest.h>

#include "fbvp/error.hpp"
#include "fbvp/fastconv.hpp"
#include "fbvp/simd/kernels.hpp"
#include "support/direct_sum.hpp"

#include <cmath>
#include <thread>

using fbvp::fastconv::ConvolutionPlan;
using fbvp::fastconv::HistoryStream;
using fbvp::testing::direct_lag_sums;
using fbvp::testing::uniform_vector;

namespace {

double relative_max_error(const std::vector<double>& got, const std::vector<double>& want) {
    double err = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        err = std::max(err, std::abs(got[i] - want[i]));
        norm = std::max(norm, std::abs(want[i]));
    }
    return norm == 0.0 ? err : err / norm;
}

// Slowly decaying kernel, shaped like the fractional weights.
std::vector<double> power_kernel(std::size_t n, double alpha) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), alpha - 1.0);
    return w;
}

}  // namespace

TEST_CASE("stream equals direct summation across sizes and blocks") {
    MESSAGE("kernels: " << fbvp::simd::active_kernels().name);
    std::mt19937_64 rng(2024);
    for (std::size_t block : {8u, 16u, 64u}) {
        for (std::size_t n : {1u, 2u, 7u, 8u, 9u, 63u, 64u, 65u, 127u, 128u, 129u, 1000u, 4096u}) {
            auto kernel = uniform_vector(n, rng);
            auto g = uniform_vector(n, rng);
            auto plan = std::make_shared<const ConvolutionPlan>(kernel, block);
            HistoryStream stream(plan);
            std::vector<double> got;
            for (double x : g) got.push_back(stream.advance(x));
            INFO("block=" << block << " n=" << n);
            CHECK(relative_max_error(got, direct_lag_sums(kernel, g)) <= 1e-12);
            CHECK(stream.steps() == n);
            CHECK(std::equal(got.begin(), got.end(), stream.history().begin()));
        }
    }
}

TEST_CASE("batch apply matches the stream and accepts prefixes") {
    std::mt19937_64 rng(5);
    const auto kernel = power_kernel(777, 1.55);
    const auto g = uniform_vector(777, rng);
    const ConvolutionPlan plan(kernel, 32);
    const auto full = plan.apply(g);
    CHECK(relative_max_error(full, direct_lag_sums(kernel, g)) <= 1e-12);

    const std::span<const double> head(g.data(), 300);
    const auto part = plan.apply(head);
    REQUIRE(part.size() == 300);
    for (std::size_t i = 0; i < 300; ++i) CHECK(part[i] == full[i]);

    CHECK(plan.apply(std::span<const double>{}).empty());
    std::vector<double> too_long(778, 1.0);
    CHECK_THROWS_AS(plan.apply(too_long), fbvp::DomainError);
}

TEST_CASE("constant signal against a closed form") {
    // w_i = 1: S_n = n g
    const std::size_t n = 3000;
    const ConvolutionPlan plan(std::vector<double>(n, 1.0), 16);
    const auto s = plan.apply(std::vector<double>(n, 0.25));
    for (std::size_t i = 0; i < n; i += 97) CHECK(s[i] == doctest::Approx(0.25 * (i + 1)).epsilon(1e-13));
}

TEST_CASE("plan validation") {
    CHECK_THROWS_AS(ConvolutionPlan({}, 64), fbvp::DomainError);
    CHECK_THROWS_AS(ConvolutionPlan({1.0}, 4), fbvp::DomainError);
    CHECK_THROWS_AS(ConvolutionPlan({1.0}, 48), fbvp::DomainError);
    CHECK_NOTHROW(ConvolutionPlan({1.0}, 8));

    const ConvolutionPlan plan(power_kernel(100, 1.3), 16);
    CHECK(plan.size() == 100);
    CHECK(plan.base_block() == 16);
    REQUIRE(plan.reversed_head().size() == 16);
    CHECK(plan.reversed_head().front() == plan.kernel()[15]);
    CHECK(plan.reversed_head().back() == plan.kernel()[0]);
    const auto& spec = plan.level_spectrum(0);
    CHECK(spec.size() == 17);
    // DC bin is the sum of w_1..w_31
    double sum = 0.0;
    for (std::size_t i = 0; i < 31; ++i) sum += plan.kernel()[i];
    CHECK(spec[0].real() == doctest::Approx(sum).epsilon(1e-13));
    CHECK(&plan.level_spectrum(0) == &spec);
}

TEST_CASE("stream rejects steps past the plan and moves cleanly") {
    auto plan = std::make_shared<const ConvolutionPlan>(std::vector<double>{1.0, 2.0, 3.0}, 8);
    HistoryStream a(plan);
    CHECK(a.advance(1.0) == 1.0);
    HistoryStream b(std::move(a));
    CHECK(b.advance(1.0) == 3.0);
    CHECK(b.advance(1.0) == 6.0);
    CHECK_THROWS_AS(b.advance(1.0), fbvp::DomainError);
    CHECK(b.steps() == 3);
    CHECK_THROWS_AS(HistoryStream(nullptr), fbvp::DomainError);
}

TEST_CASE("one plan shared by concurrent streams") {
    std::mt19937_64 rng(99);
    const std::size_t n = 5000;
    auto plan = std::make_shared<const ConvolutionPlan>(power_kernel(n, 1.7), 64);
    const auto g1 = uniform_vector(n, rng);
    const auto g2 = uniform_vector(n, rng);
    std::vector<double> r1, r2;
    auto run = [&](const std::vector<double>& g, std::vector<double>& out) {
        HistoryStream s(plan);
        for (double x : g) out.push_back(s.advance(x));
    };
    std::thread t1(run, std::cref(g1), std::ref(r1));
    std::thread t2(run, std::cref(g2), std::ref(r2));
    t1.join();
    t2.join();
    CHECK(relative_max_error(r1, direct_lag_sums(plan->kernel(), g1)) <= 1e-12);
    CHECK(relative_max_error(r2, direct_lag_sums(plan->kernel(), g2)) <= 1e-12);
}
