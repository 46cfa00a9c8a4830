#pragma once

#include <string>

namespace dgcap {

// Structural film properties. The membrane (SiO2-encapsulated metal) is
// modelled as a single effective material.
struct Material {
    std::string name;
    double youngs_modulus = 0.0;        // Pa, > 0
    double residual_stress = 0.0;       // Pa, signed; negative = compressive
    double stress_gradient = 0.0;       // Pa/m through thickness, signed
    double relative_permittivity = 1.0; // >= 1
};

// Rectangular suspended beam.
struct BeamGeometry {
    double length = 0.0;    // m
    double width = 0.0;     // m
    double thickness = 0.0; // m
};

// Rectangular electrode overlap region with its vertical gap.
struct PlateRegion {
    double length = 0.0; // m
    double width = 0.0;  // m
    double gap = 0.0;    // m
};

// Plate overlap area S = length * width.
double region_area(const PlateRegion& region);

// Second moment of a rectangular section, I = width * thickness^3 / 12.
double second_moment(const BeamGeometry& beam);

// Invariant checks. Each throws PhysicsError with the offending field named.
void validate(const Material& material);
void validate(const BeamGeometry& beam);
void validate(const PlateRegion& region);

}  // namespace dgcap
