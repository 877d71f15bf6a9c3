#include "fbvp/ivp.hpp"

#include "fbvp/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fbvp::ivp {

namespace {

void require_order(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        std::ostringstream os;
        os << "order alpha must lie strictly inside (1, 2), got " << alpha;
        throw DomainError(os.str());
    }
}

// Generalized binomial coefficients C(p, k), k = 0..count-1.
std::vector<double> binomials(double p, int count) {
    std::vector<double> c(static_cast<std::size_t>(count));
    c[0] = 1.0;
    for (int k = 1; k < count; ++k) {
        c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * (p - k + 1) / k;
    }
    return c;
}

constexpr std::size_t kSeriesFrom = 10;  // switch to x = 1/m expansions beyond this
constexpr int kSeriesTerms = 24;

}  // namespace

CqWeights compute_cq_weights(double alpha, std::size_t n) {
    require_order(alpha);
    if (n < 2) {
        throw DomainError("convolution quadrature needs at least two steps");
    }

    CqWeights w;
    w.alpha = alpha;
    w.exponents = {0.0, 1.0, alpha};

    // ((3 - 4 xi + xi^2)/2)^-a = (3/2)^-a (1 - xi)^-a (1 - xi/3)^-a.
    // Coefficients of (1 - xi)^-a: c_k = c_{k-1} (k - 1 + a) / k, all positive.
    std::vector<long double> c(n + 1);
    c[0] = 1.0L;
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = c[k - 1] * (static_cast<long double>(k) - 1.0L + alpha) / static_cast<long double>(k);
    }
    // (1 - xi/3)^-a has coefficients c_k / 3^k; beyond ~90 terms they vanish in long double.
    const std::size_t third_len = std::min<std::size_t>(n + 1, 90);
    std::vector<long double> third(third_len);
    long double scale = 1.0L;
    for (std::size_t k = 0; k < third_len; ++k) {
        third[k] = c[k] * scale;
        scale /= 3.0L;
    }
    const long double lead = std::pow(1.5L, -static_cast<long double>(alpha));
    std::vector<long double> omega(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        long double s = 0.0L;
        const std::size_t kmax = std::min(m, third_len - 1);
        for (std::size_t k = 0; k <= kmax; ++k) {
            s += third[k] * c[m - k];
        }
        omega[m] = lead * s;
    }
    w.omega.assign(omega.begin(), omega.end());

    // Exactness sums  A_nu(n) = sum_{j=0}^n omega_{n-j} j^nu  (0^0 = 1).
    // nu = 0, 1 via prefix sums; nu = alpha directly, in extended precision because
    // the targets grow like n^{2 alpha} while the starting weights stay O(n^{alpha-1}).
    std::vector<long double> jpow(n + 1);
    jpow[0] = 0.0L;
    for (std::size_t j = 1; j <= n; ++j) {
        jpow[j] = std::pow(static_cast<long double>(j), static_cast<long double>(alpha));
    }
    const long double a = alpha;
    const long double g0 = 1.0L / std::tgamma(1.0L + a);            // Gamma(1)/Gamma(1+a)
    const long double g1 = 1.0L / std::tgamma(2.0L + a);            // Gamma(2)/Gamma(2+a)
    const long double ga = std::tgamma(1.0L + a) / std::tgamma(1.0L + 2.0L * a);
    const long double denom = std::pow(2.0L, a) - 2.0L;

    w.start_weights.assign(n + 1, {0.0, 0.0, 0.0});
    long double prefix0 = 0.0L;  // sum_{m<=n} omega_m
    long double prefix1 = 0.0L;  // sum_{m<=n} m omega_m
    for (std::size_t row = 0; row <= n; ++row) {
        prefix0 += omega[row];
        prefix1 += static_cast<long double>(row) * omega[row];
        if (row == 0) {
            continue;
        }
        const long double nn = static_cast<long double>(row);
        const long double s0 = prefix0;
        const long double s1 = nn * prefix0 - prefix1;
        long double acc[4] = {0.0L, 0.0L, 0.0L, 0.0L};
        std::size_t j = 1;
        for (; j + 3 <= row; j += 4) {
            acc[0] += omega[row - j] * jpow[j];
            acc[1] += omega[row - j - 1] * jpow[j + 1];
            acc[2] += omega[row - j - 2] * jpow[j + 2];
            acc[3] += omega[row - j - 3] * jpow[j + 3];
        }
        for (; j <= row; ++j) {
            acc[0] += omega[row - j] * jpow[j];
        }
        const long double sa = (acc[0] + acc[1]) + (acc[2] + acc[3]);

        const long double r0 = g0 * std::pow(nn, a) - s0;
        const long double r1 = g1 * std::pow(nn, 1.0L + a) - s1;
        const long double ra = ga * std::pow(nn, 2.0L * a) - sa;
        // [1 1 1; 0 1 2; 0 1 2^a] [W0 W1 W2]^T = [r0 r1 ra]^T
        const long double w2 = (ra - r1) / denom;
        const long double w1 = r1 - 2.0L * w2;
        const long double w0 = r0 - w1 - w2;
        if (!std::isfinite(static_cast<double>(w0)) || !std::isfinite(static_cast<double>(w2))) {
            throw Error("starting-weight system is numerically singular");
        }
        w.start_weights[row] = {static_cast<double>(w0), static_cast<double>(w1),
                                static_cast<double>(w2)};
    }
    return w;
}

AbmKernels abm_kernels(double alpha, std::size_t n) {
    require_order(alpha);
    if (n < 1) {
        throw DomainError("Adams-Bashforth-Moulton kernels need at least one step");
    }
    AbmKernels k;
    k.alpha = alpha;
    const double a1 = alpha + 1.0;
    const auto binom_a = binomials(alpha, kSeriesTerms + 2);
    const auto binom_a1 = binomials(a1, 2 * kSeriesTerms + 2);

    // b_m = (m+1)^a - m^a = m^a expm1(a log1p(1/m))
    k.predictor.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double md = static_cast<double>(m);
        k.predictor[m] = m == 0 ? 1.0 : std::pow(md, alpha) * std::expm1(alpha * std::log1p(1.0 / md));
    }

    // d_m = m^(a+1) [(1+x)^(a+1) - 2 + (1-x)^(a+1)] = 2 m^(a+1) sum_{k>=1} C(a+1, 2k) x^{2k}
    k.corrector.assign(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        const double md = static_cast<double>(m);
        if (m < kSeriesFrom) {
            k.corrector[m] = std::pow(md + 1.0, a1) - 2.0 * std::pow(md, a1) + std::pow(md - 1.0, a1);
        } else {
            const double x2 = 1.0 / (md * md);
            double s = 0.0;
            double xp = 1.0;
            for (int j = 1; j <= kSeriesTerms; ++j) {
                xp *= x2;
                s += binom_a1[static_cast<std::size_t>(2 * j)] * xp;
            }
            k.corrector[m] = 2.0 * std::pow(md, a1) * s;
        }
    }

    // c_{0,n+1} = n^(a+1) - (n - a)(n+1)^a = n^(a+1) sum_{k>=2} (a C(a,k-1) - C(a,k)) x^k
    k.boundary.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double md = static_cast<double>(m);
        if (m < kSeriesFrom) {
            k.boundary[m] = std::pow(md, a1) - (md - alpha) * std::pow(md + 1.0, alpha);
        } else {
            const double x = 1.0 / md;
            double s = 0.0;
            double xp = x;
            for (int j = 2; j <= kSeriesTerms; ++j) {
                xp *= x;
                s += (alpha * binom_a[static_cast<std::size_t>(j - 1)] - binom_a[static_cast<std::size_t>(j)]) * xp;
            }
            k.boundary[m] = std::pow(md, a1) * s;
        }
    }
    return k;
}

}  // namespace fbvp::ivp
