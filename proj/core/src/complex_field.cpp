#include "eitbec/complex_field.hpp"

#include <cmath>
#include <numbers>

#include "eitbec/errors.hpp"

namespace eitbec {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
} // namespace

double Grid1D::wavenumber(int m) const {
    const int half = n_points / 2;
    const int shifted = (m < half) ? m : m - n_points;
    return 2.0 * std::numbers::pi * shifted / length;
}

Grid1D build_grid(int n_points, double length) {
    if (!is_power_of_two(n_points))
        throw ValidationError("grid n_points must be a power of two, got " +
                              std::to_string(n_points));
    if (!(length > 0.0))
        throw ValidationError("grid length must be positive");
    return Grid1D{n_points, length, true};
}

ComplexField1D::ComplexField1D(const Grid1D& g, std::vector<cdouble> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n_points)
        throw ValidationError("field sample count does not match grid");
}

double energy(const ComplexField1D& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return f.grid.spacing() * s;
}

double l2_norm(const ComplexField1D& f) { return std::sqrt(energy(f)); }

bool all_finite(const ComplexField1D& f) {
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexField1D gaussian_pulse(const Grid1D& grid, double center, double width, double amplitude) {
    if (!(width > 0.0)) throw ValidationError("pulse width must be positive");
    ComplexField1D f(grid);
    for (int j = 0; j < grid.n_points; ++j) {
        const double d = grid.x(j) - center;
        f.values[j] = amplitude * std::exp(-d * d / (4.0 * width * width));
    }
    return f;
}

ComplexField1D spectral_translate(const ComplexField1D& f, double shift) {
    ComplexField1D out = f;
    fft_forward(out.values);
    for (int m = 0; m < out.grid.n_points; ++m) {
        const double k = out.grid.wavenumber(m);
        out.values[m] *= std::polar(1.0, -k * shift);
    }
    fft_inverse(out.values);
    return out;
}

void require_same_grid(const ComplexField1D& a, const ComplexField1D& b, const char* where) {
    if (!(a.grid == b.grid))
        throw ValidationError(std::string(where) + ": fields live on different grids");
}

} // namespace eitbec
