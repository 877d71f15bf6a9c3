#include "fbvp/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define FBVP_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace fbvp::simd {

#ifdef FBVP_HAVE_AVX2_KERNELS

namespace {

__attribute__((target("avx2,fma"))) double dot_avx2(const double* a, const double* b,
                                                    std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
    }
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    const __m128d lo = _mm256_castpd256_pd128(acc0);
    const __m128d hi = _mm256_extractf128_pd(acc0, 1);
    __m128d s = _mm_add_pd(lo, hi);
    s = _mm_add_sd(s, _mm_unpackhi_pd(s, s));
    double total = _mm_cvtsd_f64(s);
    for (; k < n; ++k) {
        total += a[k] * b[k];
    }
    return total;
}

// Two complex numbers per register: [re0 im0 re1 im1].
__attribute__((target("avx2,fma"))) void complex_mul_avx2(const double* a, const double* b,
                                                          double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(a + 2 * k);
        const __m256d vb = _mm256_loadu_pd(b + 2 * k);
        const __m256d a_re = _mm256_movedup_pd(va);          // re re
        const __m256d a_im = _mm256_permute_pd(va, 0xF);     // im im
        const __m256d b_swap = _mm256_permute_pd(vb, 0x5);   // im re
        const __m256d cross = _mm256_mul_pd(a_im, b_swap);   // ai*bi ai*br
        // re: ar*br - ai*bi, im: ar*bi + ai*br
        _mm256_storeu_pd(out + 2 * k, _mm256_fmaddsub_pd(a_re, vb, cross));
    }
    for (; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        out[2 * k] = ar * br - ai * bi;
        out[2 * k + 1] = ar * bi + ai * br;
    }
}

__attribute__((target("avx2,fma"))) void axpy_avx2(double alpha, const double* x, double* y,
                                                   std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(y + k, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
    }
    for (; k < n; ++k) {
        y[k] += alpha * x[k];
    }
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{"avx2", dot_avx2, complex_mul_avx2, axpy_avx2};
    return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace fbvp::simd
