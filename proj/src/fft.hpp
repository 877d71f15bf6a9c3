#pragma once

#include <fftw3.h>

#include <cstddef>
#include <memory>

namespace fbvp::detail {

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
    return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * (n == 0 ? 1 : n))));
}

/// Unnormalized real <-> half-complex transforms of one power-of-two length.
/// Instances are created once per length and live for the whole process;
/// executing them is thread-safe. Buffers must come from fftw_buffer().
class RealFft {
public:
    static const RealFft& of_size(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    void forward(double* in, fftw_complex* out) const;
    /// Destroys `in`.
    void inverse(fftw_complex* in, double* out) const;

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;
    ~RealFft();

private:
    explicit RealFft(std::size_t n);

    std::size_t n_;
    fftw_plan forward_;
    fftw_plan inverse_;
};

}  // namespace fbvp::detail
