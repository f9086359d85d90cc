#include "fbq/dynamics/state.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "fbq/errors.hpp"
#include "fbq/multipliers/operators.hpp"
#include "fbq/spectral/spectral_ops.hpp"

namespace fbq {

std::string_view to_string(Formulation f) {
    return f == Formulation::Vorticity ? "vorticity" : "zeta";
}

Formulation parse_formulation(std::string_view s) {
    std::string low(s);
    for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "vorticity" || low == "omega") return Formulation::Vorticity;
    if (low == "zeta") return Formulation::Zeta;
    throw ConfigError("unknown formulation: " + std::string(s));
}

SolverState::SolverState(ScalarField rho_, ScalarField vort_, Formulation formulation_, double t_,
                         double alpha_)
    : rho(std::move(rho_)), vort(std::move(vort_)), formulation(formulation_), t(t_), alpha(alpha_) {
    if (!(rho.grid() == vort.grid())) throw ConfigError("state fields live on different grids");
    require_alpha(alpha);
    if (formulation == Formulation::Vorticity) {
        const ComplexArray c = vort.spectral_values();
        const double npts = static_cast<double>(grid().physical_size());
        const double rms = std::sqrt(spectral_energy(grid(), c)) / npts;
        if (std::abs(c[0].real() / npts) > 1e-12 * std::max(1.0, rms)) {
            throw ConfigError("vorticity must have zero mean");
        }
    }
}

}  // namespace fbq
