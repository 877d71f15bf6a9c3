#include "fbvp/mlf.hpp"

#include "fbvp/error.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

namespace fbvp::mlf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// lgamma without touching the global signgam.
double lgamma_positive(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

long double lgamma_positive(long double x) {
    int sign = 0;
    return ::lgammal_r(x, &sign);
}

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0) {
        return 0.0;
    }
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

// Default-constructed: no usable estimate.
struct Estimate {
    double value = std::numeric_limits<double>::quiet_NaN();
    double error = kInf;
};

// Power series, summed in extended precision. The error estimate accounts for
// cancellation (sum of |terms|) and for the rounding of each term's exponent.
Estimate taylor(double alpha, double beta, double z) {
    constexpr int kMaxTerms = 4000;
    const long double log_abs_z = std::log(std::abs(static_cast<long double>(z)));
    const bool alternating = z < 0.0;
    const long double eps = std::numeric_limits<long double>::epsilon();

    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    long double rounding = 0.0L;
    long double prev = 0.0L;
    for (int k = 0; k < kMaxTerms; ++k) {
        const long double lg = lgamma_positive(static_cast<long double>(alpha) * k + beta);
        const long double expo = k * log_abs_z - lg;
        if (expo > 11000.0L) {
            return {};  // overflows even extended precision
        }
        const long double mag = std::exp(expo);
        sum += (alternating && (k & 1)) ? -mag : mag;
        abs_sum += mag;
        rounding += mag * eps * (std::abs(k * log_abs_z) + std::abs(lg) + 4.0L);
        const bool decaying = k > 0 && mag < prev;
        if (decaying && (mag <= 1e-18L * std::abs(sum) || mag < 1e-320L)) {
            const double value = static_cast<double>(sum);
            if (!std::isfinite(value)) {
                return {};
            }
            const double err = static_cast<double>(rounding + 4.0L * eps * abs_sum) +
                               std::numeric_limits<double>::epsilon() * std::abs(value);
            return {value, err};
        }
        prev = mag;
    }
    return {};
}

// Residues at the poles zeta^alpha = z on the principal sheet plus the
// optimally truncated algebraic series -sum_k z^-k / Gamma(beta - alpha k).
Estimate asymptotic(double alpha, double beta, double z) {
    constexpr int kMaxTerms = 400;
    using std::numbers::pi;
    const double r = std::pow(std::abs(z), 1.0 / alpha);
    const double arg_z = z < 0.0 ? pi : 0.0;

    std::complex<double> residues = 0.0;
    double residue_scale = 0.0;
    // theta = (arg z + 2 pi m) / alpha restricted to (-pi, pi]; theta = -pi is the same pole as +pi.
    const int m_max = static_cast<int>(std::ceil(alpha)) + 1;
    for (int m = -m_max; m <= m_max; ++m) {
        const double theta = (arg_z + 2.0 * pi * m) / alpha;
        if (theta <= -pi - 1e-12 || theta > pi + 1e-12) {
            continue;
        }
        if (theta < -pi + 1e-12) {
            continue;
        }
        const std::complex<double> zeta = std::polar(r, theta);
        // zeta^(1-beta) on the principal branch, exp(zeta)
        const std::complex<double> term =
            std::exp((1.0 - beta) * std::log(zeta) + zeta) / alpha;
        residues += term;
        residue_scale += std::abs(term);
    }

    // Algebraic tail, truncated where the envelope |z|^-k max|1/Gamma| near beta - alpha k
    // is smallest. The terms themselves dip towards zero next to the poles of Gamma and
    // would stop the sum too early.
    double tail = 0.0;
    double tail_abs = 0.0;
    double omitted = 0.0;
    const double log_abs_z = std::log(std::abs(z));
    const bool terminating = alpha == std::floor(alpha) && beta == std::floor(beta);
    double prev_env = kInf;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double x = beta - alpha * k;
        if (terminating && x <= 0.0) {
            break;  // every remaining 1/Gamma vanishes
        }
        const double log_env = -k * log_abs_z + (x >= 0.5 ? -lgamma_positive(x) : lgamma_positive(1.0 - x) - std::log(pi));
        const double env = std::exp(log_env);
        if (!terminating && env >= prev_env) {
            omitted = prev_env;
            break;
        }
        // -z^-k / Gamma(x), assembled in log space: |1/Gamma(x)| alone overflows for large k
        const double sign = (z < 0.0 && (k & 1)) ? 1.0 : -1.0;
        const double term = sign * (x >= 0.5 ? env : sin_pi(x) * env);
        tail += term;
        tail_abs += std::abs(term);
        prev_env = env;
        if (k == kMaxTerms) omitted = env;
    }
    if (!terminating && omitted == 0.0) omitted = prev_env;

    const double value = residues.real() + tail;
    if (!std::isfinite(value)) {
        return {};
    }
    const double eps = std::numeric_limits<double>::epsilon();
    return {value, omitted + 8.0 * eps * (residue_scale * (1.0 + r) + tail_abs) + eps * std::abs(value)};
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "log_gamma requires a positive finite argument, got " << x;
        throw DomainError(os.str());
    }
    return lgamma_positive(x);
}

double reciprocal_gamma(double x) {
    if (x > 0.0) {
        return std::exp(-lgamma_positive(x));
    }
    if (x == std::floor(x)) {
        return 0.0;
    }
    // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    return sin_pi(x) * std::exp(lgamma_positive(1.0 - x)) / std::numbers::pi;
}

double mittag_leffler(const MlQuery& q) {
    if (!(q.alpha > 0.0) || !std::isfinite(q.alpha)) {
        std::ostringstream os;
        os << "Mittag-Leffler order alpha must be positive, got " << q.alpha;
        throw DomainError(os.str());
    }
    if (!std::isfinite(q.beta) || !std::isfinite(q.z)) {
        throw DomainError("Mittag-Leffler arguments must be finite");
    }
    if (q.z == 0.0) {
        return reciprocal_gamma(q.beta);
    }
    if (q.beta <= 0.0) {
        // Taylor terms start with 1/Gamma(beta); keep the positive-argument log-gamma path valid
        // through the recurrence E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z).
        return reciprocal_gamma(q.beta) + q.z * mittag_leffler(q.alpha, q.alpha + q.beta, q.z);
    }

    Estimate best = std::abs(q.z) <= 1.0 ? taylor(q.alpha, q.beta, q.z) : Estimate{};
    if (best.error > 1e-14 * std::max(1.0, std::abs(best.value))) {
        const Estimate series = std::abs(q.z) <= 1.0 ? best : taylor(q.alpha, q.beta, q.z);
        const Estimate asym = asymptotic(q.alpha, q.beta, q.z);
        best = series.error <= asym.error ? series : asym;
    }
    if (!std::isfinite(best.value)) {
        std::ostringstream os;
        os << "Mittag-Leffler value overflows for alpha=" << q.alpha << ", beta=" << q.beta
           << ", z=" << q.z;
        throw OverflowError(os.str());
    }
    return best.value;
}

}  // namespace fbvp::mlf
