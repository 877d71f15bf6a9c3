#include "fbvp/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace fbvp::simd {

const KernelTable& active_kernels() {
    static const KernelTable& table = [] () -> const KernelTable& {
        const char* forced = std::getenv("FBVP_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return scalar_kernels();
        }
        if (const KernelTable* wide = avx2_kernels()) {
            return *wide;
        }
        return scalar_kernels();
    }();
    return table;
}

}  // namespace fbvp::simd
