#pragma once

namespace fbvp::mlf {

/// Arguments of the two-parameter Mittag-Leffler function E_{alpha,beta}(z).
struct MlQuery {
    double alpha;
    double beta;
    double z;
};

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta) for real z.
///
/// Accurate to 1e-8 absolute (relative once |E| > 1) for alpha in (0, 2],
/// beta in (0, 3] and z in [-50, 10]. Outside that box the result is still
/// computed but the accuracy is not guaranteed.
///
/// Throws DomainError for alpha <= 0 or non-finite arguments and
/// OverflowError when the value is not representable.
double mittag_leffler(const MlQuery& q);

inline double mittag_leffler(double alpha, double beta, double z) {
    return mittag_leffler(MlQuery{alpha, beta, z});
}

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// 1 / Gamma(x) for any real x (zero at the poles 0, -1, -2, ...).
double reciprocal_gamma(double x);

}  // namespace fbvp::mlf
