#include "dgcap/geometry.hpp"

#include "dgcap/errors.hpp"

namespace dgcap {

double region_area(const PlateRegion& region) {
    validate(region);
    return region.length * region.width;
}

double second_moment(const BeamGeometry& beam) {
    validate(beam);
    return beam.width * beam.thickness * beam.thickness * beam.thickness / 12.0;
}

void validate(const Material& material) {
    if (!(material.youngs_modulus > 0.0))
        throw PhysicsError("material '" + material.name + "': youngs_modulus must be > 0");
    if (!(material.relative_permittivity >= 1.0))
        throw PhysicsError("material '" + material.name + "': relative_permittivity must be >= 1");
}

void validate(const BeamGeometry& beam) {
    if (!(beam.length > 0.0)) throw PhysicsError("beam: length must be > 0");
    if (!(beam.width > 0.0)) throw PhysicsError("beam: width must be > 0");
    if (!(beam.thickness > 0.0)) throw PhysicsError("beam: thickness must be > 0");
}

void validate(const PlateRegion& region) {
    if (!(region.length > 0.0)) throw PhysicsError("plate region: length must be > 0");
    if (!(region.width > 0.0)) throw PhysicsError("plate region: width must be > 0");
    if (!(region.gap > 0.0)) throw NonPositiveGap("plate region: gap must be > 0");
}

}  // namespace dgcap
