#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops of the history engine. Every routine has a scalar
// reference implementation; wider variants are picked at runtime and must agree
// with the reference up to reassociation rounding.

namespace fbvp::simd {

using DotFn = double (*)(const double* a, const double* b, std::size_t n);
// out[k] = a[k] * b[k] over n interleaved (re, im) pairs.
using ComplexMulFn = void (*)(const double* a, const double* b, double* out, std::size_t n);
// y[k] += alpha * x[k]
using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);

struct KernelTable {
    std::string_view name;
    DotFn dot;
    ComplexMulFn complex_mul;
    AxpyFn axpy;
};

const KernelTable& scalar_kernels();

/// AVX2+FMA table, or nullptr when the build or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Table used by the library. Chosen once per process: the widest supported
/// variant, unless FBVP_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

}  // namespace fbvp::simd
