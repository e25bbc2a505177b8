#ifndef EITBEC_QUADRATURE_HPP
#define EITBEC_QUADRATURE_HPP

#include <functional>

namespace eitbec {

// Adaptive Simpson quadrature. Deterministic; recursion depth capped at 60.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-14);

} // namespace eitbec

#endif
