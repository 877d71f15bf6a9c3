#include <doctest.h>

#include "fbvp/simd/kernels.hpp"
#include "support/direct_sum.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

using namespace fbvp::simd;

namespace {

const KernelTable* wide() {
    const KernelTable* t = avx2_kernels();
    if (t == nullptr) MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    return t;
}

}  // namespace

TEST_CASE("scalar reference kernels") {
    const auto& k = scalar_kernels();
    const double a[] = {1.0, 2.0, 3.0};
    const double b[] = {4.0, -5.0, 6.0};
    CHECK(k.dot(a, b, 3) == 12.0);
    CHECK(k.dot(a, b, 0) == 0.0);

    const double x[] = {1.0, 2.0, 3.0, -1.0};  // (1+2i), (3-i)
    const double y[] = {0.0, 1.0, 2.0, 2.0};   // i, (2+2i)
    double out[4];
    k.complex_mul(x, y, out, 2);
    CHECK(out[0] == -2.0);
    CHECK(out[1] == 1.0);
    CHECK(out[2] == 8.0);
    CHECK(out[3] == 4.0);

    double acc[] = {1.0, 1.0, 1.0};
    k.axpy(2.0, a, acc, 3);
    CHECK(acc[0] == 3.0);
    CHECK(acc[2] == 7.0);
}

TEST_CASE("wide kernels agree with the scalar reference") {
    const KernelTable* w = wide();
    if (w == nullptr) return;
    const auto& s = scalar_kernels();
    std::mt19937_64 rng(7);
    for (std::size_t n = 0; n <= 131; ++n) {
        auto a = fbvp::testing::uniform_vector(2 * n, rng);
        auto b = fbvp::testing::uniform_vector(2 * n, rng);
        INFO("n=" << n);

        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]);
        CHECK(std::abs(w->dot(a.data(), b.data(), n) - s.dot(a.data(), b.data(), n)) <= 1e-15 * (scale + 1e-300) * 4);

        std::vector<double> cw(2 * n + 1, 9.0), cs(2 * n + 1, 9.0);
        w->complex_mul(a.data(), b.data(), cw.data(), n);
        s.complex_mul(a.data(), b.data(), cs.data(), n);
        for (std::size_t i = 0; i < 2 * n; ++i) CHECK(std::abs(cw[i] - cs[i]) <= 4e-16 * 2);
        CHECK(cw[2 * n] == 9.0);  // no write past the end

        std::vector<double> yw(n + 1, 0.5), ys(n + 1, 0.5);
        w->axpy(-1.75, a.data(), yw.data(), n);
        s.axpy(-1.75, a.data(), ys.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(yw[i] - ys[i]) <= 1e-15 * 4);
        CHECK(yw[n] == 0.5);
    }
}

TEST_CASE("unaligned pointers") {
    const KernelTable* w = wide();
    if (w == nullptr) return;
    std::mt19937_64 rng(11);
    auto a = fbvp::testing::uniform_vector(203, rng);
    auto b = fbvp::testing::uniform_vector(203, rng);
    for (std::size_t off = 0; off < 4; ++off) {
        const double got = w->dot(a.data() + off, b.data() + off, 197);
        const double want = scalar_kernels().dot(a.data() + off, b.data() + off, 197);
        CHECK(got == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("active table honours the override") {
    const auto& active = active_kernels();
    CHECK(!active.name.empty());
    const char* env = std::getenv("FBVP_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") {
        CHECK(active.name == scalar_kernels().name);
    } else if (avx2_kernels() != nullptr) {
        CHECK(active.name == avx2_kernels()->name);
    }
}
