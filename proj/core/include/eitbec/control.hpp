#ifndef EITBEC_CONTROL_HPP
#define EITBEC_CONTROL_HPP

#include <utility>
#include <variant>
#include <vector>

namespace eitbec {

// Control Rabi amplitude G(t) >= 0 as a composable time function.

struct ConstantControl {
    double G0 = 0.0;
};

// G(t) = G_initial + (G_final - G_initial) * (1 + tanh((t - t_center)/t_width)) / 2
struct TanhRampControl {
    double G_initial = 0.0;
    double G_final = 0.0;
    double t_center = 0.0;
    double t_width = 1.0;
};

struct PiecewiseLinearControl {
    std::vector<std::pair<double, double>> knots; // (t, G), strictly increasing t
};

// G(t) = G0 * (1 - (tanh((t - t_off)/t_width) - tanh((t - t_on)/t_width)) / 2):
// holds at G0, drops to ~0 around t_off, recovers around t_on.
struct StopAndReleaseControl {
    double G0 = 0.0;
    double t_off = 0.0;
    double t_on = 0.0;
    double t_width = 1.0;
};

using ControlSchedule =
    std::variant<ConstantControl, TanhRampControl, PiecewiseLinearControl, StopAndReleaseControl>;

// Construction-time validation: G >= 0 everywhere, knot times strictly
// increasing, t_off < t_on, positive widths.
void validate_schedule(const ControlSchedule& s);

double evaluate_control(const ControlSchedule& s, double t);

// Exact dG/dt (piecewise-linear: segment slope, right-continuous at knots).
double control_derivative(const ControlSchedule& s, double t);

// min/max of G over [0, t_final], from the closed form of each variant.
double control_min(const ControlSchedule& s, double t_final);
double control_max(const ControlSchedule& s, double t_final);

// w(t) = int_0^t G^2 / (g^2 alpha^2 + G^2) dxi: the co-moving transform weight.
// Closed form for constant G, adaptive quadrature (rel tol 1e-10) otherwise.
double integral_weight(const ControlSchedule& s, double t, double g, double alpha_mag);

} // namespace eitbec

#endif
