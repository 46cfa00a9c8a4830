#include "dgcap/electromech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dgcap/errors.hpp"

namespace dgcap {

void validate(const LumpedActuator& actuator) {
    if (!(actuator.spring_constant > 0.0))
        throw PhysicsError("actuator: spring_constant must be > 0");
    if (!(actuator.gap > 0.0)) throw NonPositiveGap("actuator: gap must be > 0");
    if (!(actuator.actuation_area > 0.0))
        throw PhysicsError("actuator: actuation_area must be > 0");
    if (!(actuator.permittivity > 0.0))
        throw PhysicsError("actuator: permittivity must be > 0");
}

double parallel_plate_capacitance(double area, double gap, double permittivity) {
    if (!(gap > 0.0)) throw NonPositiveGap("parallel_plate_capacitance: gap must be > 0");
    if (!(area > 0.0)) throw PhysicsError("parallel_plate_capacitance: area must be > 0");
    return permittivity * area / gap;
}

double electrostatic_force(double voltage, double area, double gap, double displacement,
                           double permittivity) {
    if (displacement < 0.0)
        throw PhysicsError("electrostatic_force: displacement must be >= 0");
    if (displacement >= gap)
        throw GapClosed("electrostatic_force: displacement >= gap, electrodes touch");
    const double remaining = gap - displacement;
    return permittivity * area * voltage * voltage / (2.0 * remaining * remaining);
}

double fixed_fixed_spring_constant(const BeamGeometry& beam, double youngs_modulus) {
    if (!(youngs_modulus > 0.0))
        throw PhysicsError("fixed_fixed_spring_constant: E must be > 0");
    const double inertia = second_moment(beam);
    return 192.0 * youngs_modulus * inertia / (beam.length * beam.length * beam.length);
}

double pull_in_displacement(double gap) {
    if (!(gap > 0.0)) throw NonPositiveGap("pull_in_displacement: gap must be > 0");
    return gap / 3.0;
}

double pull_in_voltage(const LumpedActuator& actuator) {
    validate(actuator);
    const double d = actuator.gap;
    return std::sqrt(8.0 * actuator.spring_constant * d * d * d /
                     (27.0 * actuator.permittivity * actuator.actuation_area));
}

double voltage_at_displacement(const LumpedActuator& actuator, double displacement) {
    validate(actuator);
    if (displacement < 0.0)
        throw PhysicsError("voltage_at_displacement: displacement must be >= 0");
    if (displacement >= actuator.gap)
        throw GapClosed("voltage_at_displacement: displacement >= gap");
    const double remaining = actuator.gap - displacement;
    return std::sqrt(2.0 * actuator.spring_constant * displacement * remaining * remaining /
                     (actuator.permittivity * actuator.actuation_area));
}

namespace {

// Balance function in cubic form: g(x) = k x (d-x)^2 - c with c = eps S V^2 / 2.
// Monotonically increasing on [0, d/3], so the stable root brackets cleanly.
struct Balance {
    double k, d, c;
    double operator()(double x) const {
        const double r = d - x;
        return k * x * r * r - c;
    }
    double derivative(double x) const { return k * (d - x) * (d - 3.0 * x); }
};

}  // namespace

EquilibriumResult solve_equilibrium(const LumpedActuator& actuator, double voltage) {
    validate(actuator);
    if (voltage < 0.0) throw PhysicsError("solve_equilibrium: voltage must be >= 0");

    const double k = actuator.spring_constant;
    const double d = actuator.gap;
    const double eps_s = actuator.permittivity * actuator.actuation_area;

    if (voltage == 0.0) return {0.0, 0.0, 0, true};

    const double v_pi = pull_in_voltage(actuator);
    const double fold = d / 3.0;
    if (voltage > std::nextafter(v_pi, std::numeric_limits<double>::infinity()))
        throw PullIn("solve_equilibrium: voltage exceeds pull-in voltage");

    const Balance g{k, d, eps_s * voltage * voltage / 2.0};

    // At the fold the bracket degenerates; report d/3 with the unstable flag so
    // sweeps can terminate cleanly.
    if (voltage >= v_pi || g(fold) <= 0.0) return {fold, 0.0, 0, false};

    double lo = 0.0;       // g(lo) < 0
    double hi = fold;      // g(hi) > 0
    // Small-displacement linearisation k x d^2 = c as the starting guess.
    double x = std::min(g.c / (k * d * d), 0.999 * fold);
    int iterations = 0;
    for (; iterations < 100; ++iterations) {
        const double gx = g(x);
        if (gx == 0.0) break;
        if (gx < 0.0)
            lo = x;
        else
            hi = x;
        if (hi - lo <= std::numeric_limits<double>::epsilon() * hi) break;

        const double slope = g.derivative(x);
        double next = (slope != 0.0) ? x - gx / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }

    const double remaining = d - x;
    const double f_el = g.c / (remaining * remaining);
    const double residual = std::abs(k * x - f_el);
    const bool stable = (k - eps_s * voltage * voltage / (remaining * remaining * remaining)) > 0.0;
    return {x, residual, iterations, stable};
}

double tuning_range(double c_min, double c_max) {
    if (!(c_min > 0.0))
        throw NonPositiveCapacitance("tuning_range: c_min must be > 0");
    return 100.0 * (c_max - c_min) / c_min;
}

}  // namespace dgcap
