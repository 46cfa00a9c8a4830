#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgcap/electromech.hpp"
#include "dgcap/geometry.hpp"

namespace dgcap {

// Dual-gap tunable capacitor: the actuation electrodes work across a gap E_a
// three times the capacitive gap E_c, so the capacitive gap can be traversed
// end to end inside the stable travel range. Dimples stop the plate a
// residual gap short of contact.
struct DualGapDesign {
    PlateRegion capacitive_region;          // gap = E_c
    PlateRegion actuation_region;           // gap = E_a, area combines both pads
    BeamGeometry beam;
    double dimple_residual_gap = 0.0;       // m
    double effective_spring_constant = 0.0; // N/m
};

struct EquilibriumPoint {
    double voltage = 0.0;      // V
    double displacement = 0.0; // m (clamped at dimple contact)
    double capacitance = 0.0;  // F
    bool stable = false;
    bool dimple_contact = false;
};

struct SweepSpec {
    double v_start = 0.0;
    double v_stop = 0.0;
    std::size_t n_points = 0;
    bool fold_refined = false;
};

struct CVCurve {
    std::vector<EquilibriumPoint> points; // strictly ordered by voltage
    std::string design_id;
    SweepSpec sweep;
};

struct DesignReport {
    double c_zero = 0.0;                 // F
    double c_max = 0.0;                  // F
    double tuning_range = 0.0;           // percent, exact
    double pull_in_voltage = 0.0;        // V
    double dimple_contact_voltage = 0.0; // V, NaN when contact is unreachable
    double pull_in_margin = 0.0;         // m, E_a/3 - (E_c - residual)
};

// Lateral placement of the electrode regions along the beam: one actuation
// pad against each anchor, the capacitive region centred.
struct DeviceLayout {
    std::vector<std::pair<double, double>> actuation_spans; // m
    std::pair<double, double> capacitive_span;              // m
};

// Throws PhysicsError on invariant violations.
void validate(const DualGapDesign& design);

// Non-fatal design advisories, e.g. E_a deviating from 3 E_c.
std::vector<std::string> design_warnings(const DualGapDesign& design);

// C(x) = eps0 S_c / (E_c - x) under rigid-centre kinematics. Throws
// DimpleViolation beyond the dimple travel.
double displacement_to_capacitance(const DualGapDesign& design, double displacement);

// The lumped actuator seen by the bias source.
LumpedActuator actuator_of(const DualGapDesign& design);

DeviceLayout device_layout(const DualGapDesign& design);

// Equilibrium sweep over [0, min(v_max, V_PI)]. Displacements beyond the
// dimple travel are clamped with dimple_contact set; the grid is refined
// geometrically toward the fold once v_max passes 0.95 V_PI, and a sweep past
// V_PI ends with the fold point flagged unstable.
CVCurve trace_cv_curve(const DualGapDesign& design, double v_max, std::size_t n_points,
                       const std::string& design_id = "");

DesignReport evaluate_design(const DualGapDesign& design);

}  // namespace dgcap
