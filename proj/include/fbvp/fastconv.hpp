#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace fbvp::fastconv {

/// Reusable description of the lag sums
///
///     S_n = sum_{j=0}^{n-1} w_{n-j} g_j,   n = 1..N,
///
/// for a fixed kernel w_1..w_N. The lower-triangular (n, j) index set is split
/// into dyadic squares: pairs inside one base block are summed directly, every
/// other pair belongs to exactly one square {j in [2kL, (2k+1)L), n in
/// [(2k+1)L, (2k+2)L)} with L = base_block * 2^l, evaluated by FFT the moment
/// its last input arrives. Total cost O(N log^2 N).
///
/// Kernel spectra are computed on first use per level and cached. A plan is
/// shareable between threads.
class ConvolutionPlan {
public:
    /// `kernel[i]` holds w_{i+1}. Requires a non-empty kernel and a base block
    /// that is a power of two and at least 8. Throws DomainError otherwise.
    explicit ConvolutionPlan(std::vector<double> kernel, std::size_t base_block = 64);

    std::size_t size() const noexcept { return kernel_.size(); }
    std::size_t base_block() const noexcept { return base_block_; }
    std::span<const double> kernel() const noexcept { return kernel_; }

    /// Batch evaluation: returns S_1..S_n for n = signal.size() <= size().
    std::vector<double> apply(std::span<const double> signal) const;

    // Used by HistoryStream.
    std::span<const double> reversed_head() const noexcept { return reversed_head_; }
    /// Spectrum (length L + 1, r2c layout) of w_1..w_{2L-1} zero padded to 2L.
    const std::vector<std::complex<double>>& level_spectrum(std::size_t level) const;

private:
    std::vector<double> kernel_;
    std::size_t base_block_;
    std::vector<double> reversed_head_;  // w_B, w_{B-1}, ..., w_1

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::unique_ptr<std::vector<std::complex<double>>>> spectra_;
};

/// Online evaluation: feed g_0, g_1, ... one at a time; the n-th call to
/// advance() returns S_n. Amortized O(log^2 N) per step. Not thread-safe;
/// confine each stream to one thread at a time.
class HistoryStream {
public:
    explicit HistoryStream(std::shared_ptr<const ConvolutionPlan> plan);
    ~HistoryStream();
    HistoryStream(HistoryStream&&) noexcept;
    HistoryStream& operator=(HistoryStream&&) noexcept;

    /// Appends g_{n-1} and returns S_n. Throws DomainError after size() calls.
    double advance(double g);

    std::size_t steps() const noexcept { return count_; }
    /// S_1..S_steps().
    std::span<const double> history() const noexcept { return {sums_.data(), count_}; }

private:
    void apply_square(std::size_t level, std::size_t block, std::size_t end);

    struct Workspace;

    std::shared_ptr<const ConvolutionPlan> plan_;
    std::vector<double> signal_;
    std::vector<double> pending_;  // square contributions, index n
    std::vector<double> sums_;
    std::size_t count_ = 0;
    std::unique_ptr<Workspace> work_;
};

}  // namespace fbvp::fastconv
