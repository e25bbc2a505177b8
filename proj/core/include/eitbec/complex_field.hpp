#ifndef EITBEC_COMPLEX_FIELD_HPP
#define EITBEC_COMPLEX_FIELD_HPP

#include <complex>
#include <vector>

#include "eitbec/fft.hpp"

namespace eitbec {

// Uniform periodic 1D grid, x_j = -length/2 + j*spacing.
// n_points must be a power of two (spectral kernels assume it).
struct Grid1D {
    int n_points = 0;
    double length = 0.0;
    bool periodic = true;

    double spacing() const { return length / n_points; }
    double x(int j) const { return -0.5 * length + j * spacing(); }

    // Signed FFT-ordered wavenumber for bin m: 2*pi*m'/length, m' in [-n/2, n/2).
    double wavenumber(int m) const;

    bool operator==(const Grid1D& other) const = default;
};

Grid1D build_grid(int n_points, double length);

struct ComplexField1D {
    Grid1D grid;
    std::vector<cdouble> values;

    ComplexField1D() = default;
    explicit ComplexField1D(const Grid1D& g) : grid(g), values(g.n_points, cdouble{0.0, 0.0}) {}
    ComplexField1D(const Grid1D& g, std::vector<cdouble> v);
};

// spacing * sum |v|^2  (the field's squared L2 norm / energy).
double energy(const ComplexField1D& f);
double l2_norm(const ComplexField1D& f);

bool all_finite(const ComplexField1D& f);

// E(x) = amplitude * exp(-(x-center)^2 / (4 width^2)), so that |E|^2 has
// standard deviation `width`.
ComplexField1D gaussian_pulse(const Grid1D& grid, double center, double width, double amplitude);

// Exact spectral translation: returns f(x - shift) for band-limited f.
ComplexField1D spectral_translate(const ComplexField1D& f, double shift);

void require_same_grid(const ComplexField1D& a, const ComplexField1D& b, const char* where);

} // namespace eitbec

#endif
