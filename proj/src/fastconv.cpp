#include "fbvp/fastconv.hpp"

#include "fbvp/error.hpp"
#include "fbvp/simd/kernels.hpp"
#include "fft.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace fbvp::detail {

RealFft::RealFft(std::size_t n) : n_(n) {
    // FFTW_ESTIMATE keeps planning deterministic, so repeated runs are bit-identical.
    auto real = fftw_buffer<double>(n);
    auto cplx = fftw_buffer<fftw_complex>(n / 2 + 1);
    const int len = static_cast<int>(n);
    forward_ = fftw_plan_dft_r2c_1d(len, real.get(), cplx.get(), FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_1d(len, cplx.get(), real.get(), FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
}

RealFft::~RealFft() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
}

const RealFft& RealFft::of_size(std::size_t n) {
    // the FFTW planner is not reentrant
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<RealFft>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot.reset(new RealFft(n));
    }
    return *slot;
}

void RealFft::forward(double* in, fftw_complex* out) const { fftw_execute_dft_r2c(forward_, in, out); }

void RealFft::inverse(fftw_complex* in, double* out) const { fftw_execute_dft_c2r(inverse_, in, out); }

}  // namespace fbvp::detail

namespace fbvp::fastconv {

using detail::FftwBuffer;
using detail::RealFft;
using detail::fftw_buffer;

ConvolutionPlan::ConvolutionPlan(std::vector<double> kernel, std::size_t base_block)
    : kernel_(std::move(kernel)), base_block_(base_block) {
    if (kernel_.empty()) {
        throw DomainError("convolution kernel must not be empty");
    }
    if (base_block_ < 8 || !std::has_single_bit(base_block_)) {
        std::ostringstream os;
        os << "base block must be a power of two >= 8, got " << base_block_;
        throw DomainError(os.str());
    }
    reversed_head_.assign(base_block_, 0.0);
    for (std::size_t i = 0; i < base_block_; ++i) {
        const std::size_t lag = base_block_ - i;  // w_lag
        reversed_head_[i] = lag <= kernel_.size() ? kernel_[lag - 1] : 0.0;
    }
}

const std::vector<std::complex<double>>& ConvolutionPlan::level_spectrum(std::size_t level) const {
    std::lock_guard lock(cache_mutex_);
    if (spectra_.size() <= level) {
        spectra_.resize(level + 1);
    }
    auto& slot = spectra_[level];
    if (!slot) {
        const std::size_t half = base_block_ << level;
        const std::size_t n = 2 * half;
        auto real = fftw_buffer<double>(n);
        auto cplx = fftw_buffer<fftw_complex>(half + 1);
        for (std::size_t i = 0; i < n; ++i) {
            // u_i = w_{i+1} for i <= 2L-2
            real[i] = (i + 1 < n && i < kernel_.size()) ? kernel_[i] : 0.0;
        }
        RealFft::of_size(n).forward(real.get(), cplx.get());
        auto spectrum = std::make_unique<std::vector<std::complex<double>>>(half + 1);
        for (std::size_t k = 0; k <= half; ++k) {
            (*spectrum)[k] = {cplx[k][0], cplx[k][1]};
        }
        slot = std::move(spectrum);
    }
    return *slot;
}

std::vector<double> ConvolutionPlan::apply(std::span<const double> signal) const {
    if (signal.size() > size()) {
        throw DomainError("signal longer than the convolution kernel");
    }
    // Non-owning alias: the stream does not outlive this call.
    HistoryStream stream(std::shared_ptr<const ConvolutionPlan>(std::shared_ptr<void>(), this));
    for (double g : signal) {
        stream.advance(g);
    }
    const auto h = stream.history();
    return {h.begin(), h.end()};
}

struct HistoryStream::Workspace {
    std::size_t capacity = 0;  // largest square half-width served
    FftwBuffer<double> real;
    FftwBuffer<fftw_complex> spectrum;
    FftwBuffer<fftw_complex> product;

    void reserve(std::size_t half) {
        if (half <= capacity) {
            return;
        }
        real = fftw_buffer<double>(2 * half);
        spectrum = fftw_buffer<fftw_complex>(half + 1);
        product = fftw_buffer<fftw_complex>(half + 1);
        capacity = half;
    }
};

namespace {

std::shared_ptr<const ConvolutionPlan> require_plan(std::shared_ptr<const ConvolutionPlan> plan) {
    if (!plan) throw DomainError("history stream needs a convolution plan");
    return plan;
}

}  // namespace

HistoryStream::HistoryStream(std::shared_ptr<const ConvolutionPlan> plan)
    : plan_(require_plan(std::move(plan))),
      signal_(plan_->size(), 0.0),
      pending_(plan_->size() + 1, 0.0),
      sums_(plan_->size(), 0.0),
      work_(std::make_unique<Workspace>()) {}

HistoryStream::~HistoryStream() = default;
HistoryStream::HistoryStream(HistoryStream&&) noexcept = default;
HistoryStream& HistoryStream::operator=(HistoryStream&&) noexcept = default;

double HistoryStream::advance(double g) {
    const std::size_t total = plan_->size();
    if (count_ >= total) {
        throw DomainError("history stream advanced past the kernel length");
    }
    signal_[count_] = g;
    const std::size_t n = ++count_;
    const std::size_t base = plan_->base_block();

    if (n % base == 0) {
        // n = (2k+1) L with L = base * 2^level: the square over g[n-L, n) is complete.
        const auto level = static_cast<std::size_t>(std::countr_zero(n / base));
        apply_square(level, n - (base << level), n);
    }

    const std::size_t start = (n / base) * base;
    const std::size_t span = n - start;
    double direct = 0.0;
    if (span > 0) {
        const auto rev = plan_->reversed_head();
        direct = simd::active_kernels().dot(rev.data() + (base - span), signal_.data() + start, span);
    }
    const double s = pending_[n] + direct;
    sums_[n - 1] = s;
    return s;
}

void HistoryStream::apply_square(std::size_t level, std::size_t block, std::size_t end) {
    const std::size_t half = plan_->base_block() << level;
    const std::size_t n = 2 * half;
    const std::size_t total = plan_->size();
    const auto& kernels = simd::active_kernels();
    const auto& kernel_spectrum = plan_->level_spectrum(level);
    const RealFft& fft = RealFft::of_size(n);

    work_->reserve(half);
    double* real = work_->real.get();
    std::copy(signal_.begin() + static_cast<std::ptrdiff_t>(block),
              signal_.begin() + static_cast<std::ptrdiff_t>(end), real);
    std::fill(real + half, real + n, 0.0);
    fft.forward(real, work_->spectrum.get());
    kernels.complex_mul(reinterpret_cast<const double*>(work_->spectrum.get()),
                        reinterpret_cast<const double*>(kernel_spectrum.data()),
                        reinterpret_cast<double*>(work_->product.get()), half + 1);
    fft.inverse(work_->product.get(), real);

    // outputs m = end + i, i in [0, half), sit at cyclic index i + half - 1
    const std::size_t last = std::min(end + half - 1, total);
    if (last < end) {
        return;
    }
    kernels.axpy(1.0 / static_cast<double>(n), real + (half - 1), pending_.data() + end,
                 last - end + 1);
}

}  // namespace fbvp::fastconv
