#ifndef EITBEC_PARAMS_HPP
#define EITBEC_PARAMS_HPP

namespace eitbec {

// Physical constants in the nondimensional unit system (hbar = M = 1 by
// default; c is a finite, configurable parameter). Collision constants are
// stored once per unordered pair: u_ij = u_ji is enforced at construction.
struct PhysicalParams {
    double mass = 1.0;
    double hbar = 1.0;
    double g = 0.0;        // atom-field coupling of the probe
    double gamma = 0.0;    // spontaneous decay from level 0
    double Delta = 0.0;    // detuning on the level-0 amplitude
    double light_speed = 1.0;
    double k_G = 0.0;      // control carrier wavenumber
    double k_F = 0.0;      // probe carrier wavenumber
    double u0 = 0.0, u1 = 0.0, u2 = 0.0;
    double u01 = 0.0, u02 = 0.0, u12 = 0.0;
    double mu = 0.0;       // chemical phase rate of the uniform condensate
    double alpha_mag = 0.0;

    double k_t() const { return k_G - k_F; }
    double g2n() const { return g * g * alpha_mag * alpha_mag; }
};

void validate_params(const PhysicalParams& p);

// mu = -(V2/hbar + 2 u2 |alpha|^2): the unique rate for which a uniform
// condensate alpha e^{i mu t} solves the zeroth-order equation.
double chemical_phase_rate(double V2_const, double u2, double alpha_mag, double hbar);

} // namespace eitbec

#endif
