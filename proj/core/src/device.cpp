#include "dgcap/device.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dgcap/constants.hpp"
#include "dgcap/errors.hpp"

namespace dgcap {

void validate(const DualGapDesign& design) {
    validate(design.capacitive_region);
    validate(design.actuation_region);
    validate(design.beam);
    if (!(design.dimple_residual_gap > 0.0))
        throw PhysicsError("design: dimple_residual_gap must be > 0");
    if (!(design.dimple_residual_gap < design.capacitive_region.gap))
        throw PhysicsError("design: dimple_residual_gap must be below the capacitive gap");
    if (!(design.actuation_region.gap > design.capacitive_region.gap))
        throw PhysicsError("design: actuation gap must exceed the capacitive gap");
    if (!(design.effective_spring_constant > 0.0))
        throw PhysicsError("design: effective_spring_constant must be > 0");
}

std::vector<std::string> design_warnings(const DualGapDesign& design) {
    std::vector<std::string> warnings;
    const double ratio = design.actuation_region.gap / design.capacitive_region.gap;
    if (std::abs(ratio - 3.0) > 1e-9)
        warnings.push_back(
            "actuation gap is not 3x the capacitive gap; the full capacitive travel may not "
            "be reachable before pull-in");
    return warnings;
}

double displacement_to_capacitance(const DualGapDesign& design, double displacement) {
    validate(design);
    if (displacement < 0.0)
        throw PhysicsError("displacement_to_capacitance: displacement must be >= 0");
    const double travel = design.capacitive_region.gap - design.dimple_residual_gap;
    if (displacement > travel * (1.0 + 1e-12))
        throw DimpleViolation("displacement_to_capacitance: displacement beyond dimple travel");
    return parallel_plate_capacitance(region_area(design.capacitive_region),
                                      design.capacitive_region.gap - displacement,
                                      kVacuumPermittivity);
}

LumpedActuator actuator_of(const DualGapDesign& design) {
    validate(design);
    return {design.effective_spring_constant, design.actuation_region.gap,
            region_area(design.actuation_region), kVacuumPermittivity};
}

DeviceLayout device_layout(const DualGapDesign& design) {
    validate(design);
    const double beam_length = design.beam.length;
    const double pad = design.actuation_region.length / 2.0; // per-side pad length
    const double cap = design.capacitive_region.length;
    if (2.0 * pad + cap > beam_length)
        throw PhysicsError("device layout: electrode regions do not fit on the beam");
    DeviceLayout layout;
    layout.actuation_spans = {{0.0, pad}, {beam_length - pad, beam_length}};
    layout.capacitive_span = {(beam_length - cap) / 2.0, (beam_length + cap) / 2.0};
    return layout;
}

CVCurve trace_cv_curve(const DualGapDesign& design, double v_max, std::size_t n_points,
                       const std::string& design_id) {
    validate(design);
    if (!(v_max > 0.0)) throw PhysicsError("trace_cv_curve: v_max must be > 0");
    if (n_points < 2) throw PhysicsError("trace_cv_curve: at least 2 points required");

    const LumpedActuator actuator = actuator_of(design);
    const double v_pi = pull_in_voltage(actuator);
    const double v_end = std::min(v_max, v_pi);
    const bool refine = v_max > 0.95 * v_pi;

    std::vector<double> grid;
    grid.reserve(n_points + 12);
    for (std::size_t i = 0; i < n_points; ++i)
        grid.push_back(v_end * static_cast<double>(i) / static_cast<double>(n_points - 1));
    if (refine) {
        // The x(V) slope diverges at the fold; pack extra points toward it.
        const double base = 0.95 * v_pi;
        for (int j = 1; j <= 10; ++j) {
            const double v = v_end - (v_end - base) * std::pow(2.0, -j);
            if (v > 0.0 && v < v_end) grid.push_back(v);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end(),
                               [&](double a, double b) { return b - a < 1e-12 * v_end; }),
                   grid.end());
    }

    const double contact_travel = design.capacitive_region.gap - design.dimple_residual_gap;

    CVCurve curve;
    curve.design_id = design_id;
    curve.sweep = {0.0, v_max, n_points, refine};
    curve.points.reserve(grid.size());
    for (double v : grid) {
        const EquilibriumResult eq = solve_equilibrium(actuator, v);
        EquilibriumPoint point;
        point.voltage = v;
        point.stable = eq.stable;
        point.dimple_contact = eq.displacement >= contact_travel;
        point.displacement = std::min(eq.displacement, contact_travel);
        point.capacitance = displacement_to_capacitance(design, point.displacement);
        curve.points.push_back(point);
    }
    return curve;
}

DesignReport evaluate_design(const DualGapDesign& design) {
    validate(design);
    const LumpedActuator actuator = actuator_of(design);
    const double contact_travel = design.capacitive_region.gap - design.dimple_residual_gap;

    DesignReport report;
    report.c_zero = displacement_to_capacitance(design, 0.0);
    report.c_max = displacement_to_capacitance(design, contact_travel);
    report.tuning_range = tuning_range(report.c_zero, report.c_max);
    report.pull_in_voltage = pull_in_voltage(actuator);
    report.pull_in_margin = actuator.gap / 3.0 - contact_travel;
    report.dimple_contact_voltage =
        (contact_travel <= actuator.gap / 3.0)
            ? voltage_at_displacement(actuator, contact_travel)
            : std::numeric_limits<double>::quiet_NaN();
    return report;
}

}  // namespace dgcap
