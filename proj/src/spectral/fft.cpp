#include "fbq/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "fbq/errors.hpp"

namespace fbq {
namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan inverse = nullptr;
};

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

const PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard lock(planner_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const std::size_t nreal = static_cast<std::size_t>(n) * n;
    const std::size_t ncplx = static_cast<std::size_t>(n) * (n / 2 + 1);
    double* r = fftw_alloc_real(nreal);
    fftw_complex* c = fftw_alloc_complex(ncplx);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_r2c_2d(n, n, r, c, flags);
    p.inverse = fftw_plan_dft_c2r_2d(n, n, c, r, flags);
    fftw_free(r);
    fftw_free(c);
    if (!p.forward || !p.inverse) throw NumericalError("FFTW planning failed");
    return cache.emplace(n, p).first->second;
}

void check_sizes(const SpectralGrid& g, std::size_t nreal, std::size_t ncplx) {
    if (nreal != g.physical_size() || ncplx != g.spectral_size()) {
        throw ConfigError("array size does not match grid");
    }
}

}  // namespace

void forward_fft(const SpectralGrid& grid, std::span<const double> physical,
                 std::span<std::complex<double>> spectral) {
    check_sizes(grid, physical.size(), spectral.size());
    const PlanPair& p = plans_for(grid.n());
    // r2c does not modify its input, the const_cast only satisfies the C API.
    fftw_execute_dft_r2c(p.forward, const_cast<double*>(physical.data()),
                         reinterpret_cast<fftw_complex*>(spectral.data()));
}

void inverse_fft(const SpectralGrid& grid, std::span<const std::complex<double>> spectral,
                 std::span<double> physical) {
    check_sizes(grid, physical.size(), spectral.size());
    const PlanPair& p = plans_for(grid.n());
    thread_local std::vector<std::complex<double>> scratch;
    scratch.assign(spectral.begin(), spectral.end());
    fftw_execute_dft_c2r(p.inverse, reinterpret_cast<fftw_complex*>(scratch.data()),
                         physical.data());
    const double scale = 1.0 / static_cast<double>(grid.physical_size());
    for (double& v : physical) v *= scale;
}

}  // namespace fbq
