#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dgcap/constants.hpp"
#include "dgcap/geometry.hpp"
#include "dgcap/profile.hpp"

namespace dgcap {

// Hermite-cubic beam discretisation, clamped at both end nodes. The element
// axial force is the membrane prestress resultant (tension positive); it
// enters through the consistent geometric stiffness matrix.
struct BeamElement {
    std::size_t node_i = 0;
    std::size_t node_j = 0;
    double ei = 0.0;          // N m^2
    double axial_force = 0.0; // N, tension positive
};

struct BeamMesh {
    std::vector<double> node_positions; // m, strictly increasing, starts at 0
    std::vector<BeamElement> elements;

    double length() const { return node_positions.back(); }
    std::size_t n_nodes() const { return node_positions.size(); }
};

struct PointLoad {
    double position = 0.0; // m
    double force = 0.0;    // N, positive away from substrate
};

struct LoadSample {
    double position = 0.0; // m
    double intensity = 0.0;// N/m line load
};

struct LoadCase {
    std::vector<PointLoad> point_loads;
    std::vector<LoadSample> distributed_load; // piecewise-linear between samples
    double distributed_moment = 0.0;          // N m / m, uniform
};

// Nodal transverse displacement and rotation. Clamped ends stay zero.
struct DeflectionField {
    std::vector<double> displacement; // m, per node
    std::vector<double> rotation;     // rad, per node
};

void validate(const BeamMesh& mesh);

// Uniform mesh with EI = E I and axial force = residual stress * cross section.
BeamMesh build_mesh(const BeamGeometry& beam, const Material& material,
                    std::size_t n_elements);

// Solves (K_bending + K_geometric) u = f under clamped-clamped constraints.
// Throws SingularSystem when compression destroys positive definiteness.
DeflectionField assemble_and_solve(const BeamMesh& mesh, const LoadCase& load);

// Hermite interpolation of the solved field inside elements.
double evaluate_deflection(const BeamMesh& mesh, const DeflectionField& field, double x);

// P / delta_centre for a unit centre point load. Requires a node at the exact
// midspan (even element count on a uniform mesh).
double numeric_spring_constant(const BeamMesh& mesh);

// Post-release shape driven by the through-thickness stress gradient. A
// uniform intrinsic moment does no work against clamped-clamped kinematics
// (its consistent load telescopes to the supports), so the driver is applied
// as the equivalent uniform transverse load of the gradient moment resolved
// on the fundamental mode: q = pi^2 * gradient * I / L^2. Negative
// displacement means toward the substrate.
DeflectionField release_profile(const BeamMesh& mesh, const Material& material);

// Bisects the stress gradient until the release-profile centre deflection
// meets the target. Returns the calibrated gradient [Pa/m].
double calibrate_stress_gradient(const BeamMesh& mesh, const Material& material,
                                 double target_center_deflection);

// gap(x) = initial_gap(x) + w(x), sampled on the initial profile's grid.
// Throws SpanMismatch when the profile span disagrees with the mesh span and
// PhysicsError when the membrane would cross the substrate.
HeightProfile gap_function(const BeamMesh& mesh, const DeflectionField& release,
                           const HeightProfile& initial_gap_profile);

struct CoupledSolveOptions {
    double permittivity = kVacuumPermittivity; // F/m
    double tolerance = 1e-12;                  // m, max displacement change
    int max_iterations = 200;
};

// Electrostatic pressure eps V^2 / (2 g^2) applied over the actuation spans,
// iterated to a self-consistent deflection. Throws PullIn when the gap
// collapses and NoConvergence when the iteration stalls.
DeflectionField coupled_electrostatic_solve(const BeamMesh& mesh,
                                            const HeightProfile& gap_profile, double voltage,
                                            const std::vector<std::pair<double, double>>& actuation_spans,
                                            double beam_width,
                                            const CoupledSolveOptions& options = {});

}  // namespace dgcap
