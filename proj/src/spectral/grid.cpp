#include "fbq/spectral/grid.hpp"

#include <string>

#include "fbq/errors.hpp"

namespace fbq {

SpectralGrid::SpectralGrid(int n, double length) : n_(n), length_(length) {
    if (n < 8 || n % 2 != 0) {
        throw ConfigError("grid size must be even and >= 8, got " + std::to_string(n));
    }
    if (!(length > 0.0)) {
        throw ConfigError("torus length must be positive");
    }
}

}  // namespace fbq
