#include "eitbec/potential.hpp"

#include <cmath>

#include "eitbec/errors.hpp"

namespace eitbec {

PotentialSpec PotentialSpec::zero() { return PotentialSpec{}; }

PotentialSpec PotentialSpec::constant(double value) {
    PotentialSpec p;
    p.kind_ = Kind::Constant;
    p.value_ = value;
    return p;
}

PotentialSpec PotentialSpec::harmonic(double omega, double center) {
    if (omega < 0.0) throw ValidationError("potential: harmonic omega must be >= 0");
    PotentialSpec p;
    p.kind_ = Kind::Harmonic;
    p.omega_ = omega;
    p.center_ = center;
    return p;
}

PotentialSpec PotentialSpec::square_well(double depth, double half_width) {
    if (!(half_width > 0.0)) throw ValidationError("potential: half_width must be positive");
    PotentialSpec p;
    p.kind_ = Kind::SquareWell;
    p.value_ = depth;
    p.half_width_ = half_width;
    return p;
}

PotentialSpec PotentialSpec::tabulated(const Grid1D& grid, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw ValidationError("potential: tabulated sample count must equal grid n_points");
    PotentialSpec p;
    p.kind_ = Kind::Tabulated;
    p.grid_ = grid;
    p.samples_ = std::move(samples);
    return p;
}

double PotentialSpec::evaluate(double x, double mass) const {
    switch (kind_) {
    case Kind::Zero:
        return 0.0;
    case Kind::Constant:
        return value_;
    case Kind::Harmonic: {
        const double d = x - center_;
        return 0.5 * mass * omega_ * omega_ * d * d;
    }
    case Kind::SquareWell:
        return std::abs(x) <= half_width_ ? -value_ : 0.0;
    case Kind::Tabulated: {
        const double dx = grid_.spacing();
        double s = (x + 0.5 * grid_.length) / dx;
        const int n = grid_.n_points;
        s -= std::floor(s / n) * n;
        const int j = static_cast<int>(std::floor(s));
        const double f = s - j;
        return (1.0 - f) * samples_[j % n] + f * samples_[(j + 1) % n];
    }
    }
    return 0.0;
}

std::vector<double> PotentialSpec::sample(const Grid1D& grid, double mass) const {
    if (kind_ == Kind::Tabulated && !(grid == grid_))
        throw ValidationError("potential: tabulated samples were built for a different grid");
    std::vector<double> v(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) v[j] = evaluate(grid.x(j), mass);
    return v;
}

} // namespace eitbec
