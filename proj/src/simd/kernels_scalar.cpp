#include "fbvp/simd/kernels.hpp"

namespace fbvp::simd {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += a[k] * b[k];
    }
    return s;
}

void complex_mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        out[2 * k] = ar * br - ai * bi;
        out[2 * k + 1] = ar * bi + ai * br;
    }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        y[k] += alpha * x[k];
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", dot_scalar, complex_mul_scalar, axpy_scalar};
    return table;
}

}  // namespace fbvp::simd
