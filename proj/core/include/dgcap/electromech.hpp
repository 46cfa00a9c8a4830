#pragma once

#include "dgcap/geometry.hpp"

namespace dgcap {

// One-degree-of-freedom electrostatic actuator: a plate of area S suspended by
// a linear spring k over a gap d, biased through permittivity eps.
struct LumpedActuator {
    double spring_constant = 0.0; // N/m
    double gap = 0.0;             // m
    double actuation_area = 0.0;  // m^2
    double permittivity = 0.0;    // F/m
};

struct EquilibriumResult {
    double displacement = 0.0;   // m, stable root in [0, gap/3]
    double residual_force = 0.0; // N, |k x - F_el(x)| at the returned root
    int iterations = 0;
    bool stable = false;
};

void validate(const LumpedActuator& actuator);

// C = eps * S / d.
double parallel_plate_capacitance(double area, double gap, double permittivity);

// F = eps * S * V^2 / (2 (d - x)^2).
double electrostatic_force(double voltage, double area, double gap, double displacement,
                           double permittivity);

// Centre point-load stiffness of a clamped-clamped beam: 192 E I / L^3.
double fixed_fixed_spring_constant(const BeamGeometry& beam, double youngs_modulus);

// Travel limit of the stable branch: d/3.
double pull_in_displacement(double gap);

// V_PI = sqrt(8 k d^3 / (27 eps S)).
double pull_in_voltage(const LumpedActuator& actuator);

// Bias that holds the plate at displacement x: V = sqrt(2 k x (d-x)^2 / (eps S)).
// Increasing on [0, d/3], decreasing beyond; stable-branch callers pass x <= d/3.
double voltage_at_displacement(const LumpedActuator& actuator, double displacement);

// Smallest non-negative root of k x (d-x)^2 = eps S V^2 / 2, found by a
// bracketed Newton iteration on [0, d/3]. At V = V_PI (within one ulp) returns
// x = d/3 flagged unstable; above that throws PullIn.
EquilibriumResult solve_equilibrium(const LumpedActuator& actuator, double voltage);

// 100 * (c_max - c_min) / c_min [percent].
double tuning_range(double c_min, double c_max);

}  // namespace dgcap
