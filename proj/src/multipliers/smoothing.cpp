#include "fbq/multipliers/smoothing.hpp"

#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/norms.hpp"

namespace fbq {

double n_smoothing_ratio_of(const ScalarField& f, double alpha, double q) {
    const ScalarField nf = n_operator(f, alpha);
    const double num = lq_norm(nf, q) + lq_norm(magnitude(gradient(nf)), q);
    const double den = lq_norm(f, q);
    if (den == 0.0) return 0.0;
    return num / den;
}

SmoothingResult n_smoothing_ratio(double alpha, double q, int trials, std::uint64_t seed,
                                  const SpectralGrid& grid, const RandomFieldSpec& spec) {
    if (trials < 1) throw ConfigError("n_smoothing_ratio needs at least one trial");
    SmoothingResult res;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        const double r = n_smoothing_ratio_of(random_field(grid, spec, s), alpha, q);
        res.ratios.push_back(r);
        if (t == 0 || r > res.max_ratio) {
            res.max_ratio = r;
            res.worst_seed = s;
        }
    }
    return res;
}

}  // namespace fbq
