#include "eitbec/control.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eitbec/errors.hpp"
#include "eitbec/quadrature.hpp"

namespace eitbec {

namespace {

double sech2(double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c);
}

struct Evaluate {
    double t;
    double operator()(const ConstantControl& c) const { return c.G0; }
    double operator()(const TanhRampControl& c) const {
        return c.G_initial +
               (c.G_final - c.G_initial) * 0.5 * (1.0 + std::tanh((t - c.t_center) / c.t_width));
    }
    double operator()(const PiecewiseLinearControl& c) const {
        const auto& k = c.knots;
        if (t <= k.front().first) return k.front().second;
        if (t >= k.back().first) return k.back().second;
        auto it = std::upper_bound(k.begin(), k.end(), t,
                                   [](double v, const auto& p) { return v < p.first; });
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double f = (t - lo.first) / (hi.first - lo.first);
        return lo.second + f * (hi.second - lo.second);
    }
    double operator()(const StopAndReleaseControl& c) const {
        return c.G0 *
               (1.0 - 0.5 * (std::tanh((t - c.t_off) / c.t_width) -
                             std::tanh((t - c.t_on) / c.t_width)));
    }
};

struct Derivative {
    double t;
    double operator()(const ConstantControl&) const { return 0.0; }
    double operator()(const TanhRampControl& c) const {
        return (c.G_final - c.G_initial) * 0.5 * sech2((t - c.t_center) / c.t_width) / c.t_width;
    }
    double operator()(const PiecewiseLinearControl& c) const {
        const auto& k = c.knots;
        if (t < k.front().first || t >= k.back().first) return 0.0;
        auto it = std::upper_bound(k.begin(), k.end(), t,
                                   [](double v, const auto& p) { return v < p.first; });
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        return (hi.second - lo.second) / (hi.first - lo.first);
    }
    double operator()(const StopAndReleaseControl& c) const {
        return c.G0 * 0.5 * (sech2((t - c.t_on) / c.t_width) - sech2((t - c.t_off) / c.t_width)) /
               c.t_width;
    }
};

} // namespace

void validate_schedule(const ControlSchedule& s) {
    if (const auto* c = std::get_if<ConstantControl>(&s)) {
        if (c->G0 < 0.0) throw ValidationError("control: G0 must be >= 0");
    } else if (const auto* r = std::get_if<TanhRampControl>(&s)) {
        if (r->G_initial < 0.0 || r->G_final < 0.0)
            throw ValidationError("control: ramp endpoints must be >= 0");
        if (!(r->t_width > 0.0)) throw ValidationError("control: t_width must be positive");
    } else if (const auto* p = std::get_if<PiecewiseLinearControl>(&s)) {
        if (p->knots.empty()) throw ValidationError("control: knot list is empty");
        for (std::size_t i = 0; i < p->knots.size(); ++i) {
            if (p->knots[i].second < 0.0)
                throw ValidationError("control: knot G values must be >= 0");
            if (i > 0 && !(p->knots[i].first > p->knots[i - 1].first))
                throw ValidationError("control: knot times must be strictly increasing");
        }
    } else if (const auto* sr = std::get_if<StopAndReleaseControl>(&s)) {
        if (sr->G0 < 0.0) throw ValidationError("control: G0 must be >= 0");
        if (!(sr->t_width > 0.0)) throw ValidationError("control: t_width must be positive");
        if (!(sr->t_off < sr->t_on))
            throw ValidationError("control: t_off must precede t_on");
    }
}

double evaluate_control(const ControlSchedule& s, double t) {
    if (t < 0.0) throw ValidationError("control: t must be >= 0, got " + std::to_string(t));
    return std::visit(Evaluate{t}, s);
}

double control_derivative(const ControlSchedule& s, double t) {
    if (t < 0.0) throw ValidationError("control: t must be >= 0");
    return std::visit(Derivative{t}, s);
}

double control_min(const ControlSchedule& s, double t_final) {
    if (const auto* c = std::get_if<ConstantControl>(&s)) return c->G0;
    if (std::holds_alternative<TanhRampControl>(s))
        return std::min(evaluate_control(s, 0.0), evaluate_control(s, t_final));
    if (const auto* p = std::get_if<PiecewiseLinearControl>(&s)) {
        double m = evaluate_control(s, 0.0);
        for (const auto& [tk, gk] : p->knots)
            if (tk >= 0.0 && tk <= t_final) m = std::min(m, gk);
        return std::min(m, evaluate_control(s, t_final));
    }
    if (const auto* sr = std::get_if<StopAndReleaseControl>(&s)) {
        // Minimum sits midway through the off-window if the run reaches it.
        const double tm = 0.5 * (sr->t_off + sr->t_on);
        double m = std::min(evaluate_control(s, 0.0), evaluate_control(s, t_final));
        if (t_final >= sr->t_off) m = std::min(m, evaluate_control(s, std::min(tm, t_final)));
        return m;
    }
    return 0.0;
}

double control_max(const ControlSchedule& s, double t_final) {
    if (const auto* c = std::get_if<ConstantControl>(&s)) return c->G0;
    if (std::holds_alternative<TanhRampControl>(s))
        return std::max(evaluate_control(s, 0.0), evaluate_control(s, t_final));
    if (const auto* p = std::get_if<PiecewiseLinearControl>(&s)) {
        double m = std::max(evaluate_control(s, 0.0), evaluate_control(s, t_final));
        for (const auto& [tk, gk] : p->knots)
            if (tk >= 0.0 && tk <= t_final) m = std::max(m, gk);
        return m;
    }
    if (const auto* sr = std::get_if<StopAndReleaseControl>(&s)) return sr->G0;
    return 0.0;
}

double integral_weight(const ControlSchedule& s, double t, double g, double alpha_mag) {
    if (t < 0.0) throw ValidationError("integral_weight: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double q = g * g * alpha_mag * alpha_mag;
    if (const auto* c = std::get_if<ConstantControl>(&s)) {
        const double G2 = c->G0 * c->G0;
        if (G2 == 0.0 && q == 0.0) return 0.0;
        return t * G2 / (q + G2);
    }
    auto integrand = [&](double xi) {
        const double G = std::visit(Evaluate{xi}, s);
        const double G2 = G * G;
        const double den = q + G2;
        return den > 0.0 ? G2 / den : 0.0;
    };
    return integrate(integrand, 0.0, t, 1e-10, 1e-14);
}

} // namespace eitbec
