#include "eitbec/params.hpp"

#include "eitbec/errors.hpp"

namespace eitbec {

void validate_params(const PhysicalParams& p) {
    if (!(p.mass > 0.0)) throw ValidationError("params: mass must be positive");
    if (!(p.hbar > 0.0)) throw ValidationError("params: hbar must be positive");
    if (!(p.light_speed > 0.0)) throw ValidationError("params: c must be positive");
    if (p.g < 0.0) throw ValidationError("params: g must be >= 0");
    if (p.gamma < 0.0) throw ValidationError("params: gamma must be >= 0");
    if (p.alpha_mag < 0.0) throw ValidationError("params: alpha must be >= 0");
}

double chemical_phase_rate(double V2_const, double u2, double alpha_mag, double hbar) {
    return -(V2_const / hbar + 2.0 * u2 * alpha_mag * alpha_mag);
}

} // namespace eitbec
