#ifndef EITBEC_CONFIG_HPP
#define EITBEC_CONFIG_HPP

#include <array>
#include <string>
#include <vector>

#include "eitbec/complex_field.hpp"
#include "eitbec/control.hpp"
#include "eitbec/params.hpp"
#include "eitbec/potential.hpp"

namespace eitbec {

enum class SolverTier { Full, Reduced, Analytic };

const char* tier_name(SolverTier t);
SolverTier tier_from_name(const std::string& name);

struct PulseSpec {
    enum class Kind { Gaussian, Tabulated };
    Kind kind = Kind::Gaussian;
    double center = 0.0;
    double width = 1.0;
    double amplitude = 1.0;
    std::vector<cdouble> samples;

    ComplexField1D build(const Grid1D& grid) const;
    bool operator==(const PulseSpec&) const = default;
};

// Initial condensate profile for level 2. Uniform: alpha everywhere.
// Slab: alpha * (tanh((x-xl)/w_e) - tanh((x-xr)/w_e))/2 with xl,xr = center -+ half_width.
struct CondensateSpec {
    enum class Kind { Uniform, Slab };
    Kind kind = Kind::Uniform;
    double center = 0.0;
    double half_width = 0.0;
    double edge_width = 1.0;

    ComplexField1D build(const Grid1D& grid, double alpha_mag) const;
    double amplitude_at(double x, double alpha_mag) const;
    bool operator==(const CondensateSpec&) const = default;
};

enum class FirstOrderInit { DarkState, Zero };

struct SimulationConfig {
    Grid1D grid;
    PhysicalParams params;
    std::array<PotentialSpec, 3> potentials; // indexed by level 0,1,2
    ControlSchedule control = ConstantControl{0.0};
    PulseSpec pulse;
    CondensateSpec condensate;
    FirstOrderInit first_order_init = FirstOrderInit::DarkState;
    double dt = 0.0;
    double t_final = 0.0;
    int snapshot_stride = 1;
    SolverTier tier = SolverTier::Reduced;
    int analytic_substeps = 0;   // 0: derive from dt
    double detector_x = 0.0;     // flux detection plane (full tier)
    bool has_detector = false;

    // EIT amplitude factor G(0)/sqrt(G(0)^2 + g^2 |alpha|^2) evaluated with the
    // condensate amplitude at the pulse center.
    double amplitude_factor0() const;

    // Physical initial envelope: amplitude_factor0() * pulse profile.
    ComplexField1D initial_envelope() const;
};

bool config_equal(const SimulationConfig& a, const SimulationConfig& b);

struct LoadedConfig {
    SimulationConfig config;
    std::vector<std::string> warnings;
};

// Flat key = value text with optional [section] headers and # comments.
// Unknown keys are errors (meta.* is reserved and ignored). Errors carry
// file:line anchors.
LoadedConfig parse_config_text(const std::string& text, const std::string& origin);
LoadedConfig load_config(const std::string& path);

// Full physics validation (grid/pulse margins, carrier wavenumbers commensurate
// with the grid, per-tier stability bounds). Returns human-readable warnings.
std::vector<std::string> validate_config(const SimulationConfig& cfg);

// Canonical, re-parsable echo with defaults expanded. Round-trips exactly.
std::string serialize_config(const SimulationConfig& cfg);

} // namespace eitbec

#endif
