#ifndef EITBEC_POTENTIAL_HPP
#define EITBEC_POTENTIAL_HPP

#include <vector>

#include "eitbec/complex_field.hpp"

namespace eitbec {

// Static trapping potential for one level. Evaluation is deterministic and
// time-independent; the harmonic variant needs the particle mass:
//   V(x) = mass * omega^2 * (x - center)^2 / 2.
// The square well is -depth inside |x| <= half_width (centered at 0).
class PotentialSpec {
public:
    enum class Kind { Zero, Constant, Harmonic, SquareWell, Tabulated };

    static PotentialSpec zero();
    static PotentialSpec constant(double value);
    static PotentialSpec harmonic(double omega, double center);
    static PotentialSpec square_well(double depth, double half_width);
    static PotentialSpec tabulated(const Grid1D& grid, std::vector<double> samples);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_uniform() const { return kind_ == Kind::Zero || kind_ == Kind::Constant; }
    double constant_value() const { return value_; }
    double omega() const { return omega_; }
    double center() const { return center_; }

    // Tabulated lookup wraps periodically with linear interpolation.
    double evaluate(double x, double mass) const;
    std::vector<double> sample(const Grid1D& grid, double mass) const;

private:
    Kind kind_ = Kind::Zero;
    double value_ = 0.0;      // Constant value or SquareWell depth
    double omega_ = 0.0;      // Harmonic
    double center_ = 0.0;     // Harmonic center
    double half_width_ = 0.0; // SquareWell
    Grid1D grid_{};           // Tabulated
    std::vector<double> samples_;
};

} // namespace eitbec

#endif
