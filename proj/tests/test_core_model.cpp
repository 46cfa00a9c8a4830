#include <doctest.h>

#include <random>

#include "dgcap/constants.hpp"
#include "dgcap/errors.hpp"
#include "dgcap/geometry.hpp"
#include "dgcap/units.hpp"

#include "oracle_helpers.hpp"

using namespace dgcap;

TEST_CASE("vacuum permittivity pinned to the engineering value") {
    CHECK(kVacuumPermittivity == 8.854e-12);
}

TEST_CASE("region_area") {
    CHECK(region_area({units::from_um(250), units::from_um(80), units::from_um(1.5)}) ==
          doctest::Approx(2.0e-8).epsilon(1e-12));
    // combined actuation area, two 200 um pads
    CHECK(region_area({units::from_um(400), units::from_um(80), units::from_um(4.5)}) ==
          doctest::Approx(3.2e-8).epsilon(1e-12));
    CHECK(region_area({1.0, 1.0, 1.0}) == 1.0);
}

TEST_CASE("second_moment of rectangular sections") {
    CHECK(second_moment({units::from_um(800), units::from_um(80), units::from_um(2)}) ==
          doctest::Approx(5.333333333e-23).epsilon(1e-9));
    CHECK(second_moment({1.0, 12.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
    // 8x the t = 2 um case: cubic thickness scaling
    CHECK(second_moment({units::from_um(800), units::from_um(80), units::from_um(4)}) ==
          doctest::Approx(4.266666667e-22).epsilon(1e-9));
}

TEST_CASE("second_moment scales as thickness cubed") {
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        BeamGeometry beam{oracle::log_uniform(rng, 1e-5, 1e-2),
                          oracle::log_uniform(rng, 1e-6, 1e-3),
                          oracle::log_uniform(rng, 1e-7, 1e-4)};
        BeamGeometry doubled = beam;
        doubled.thickness *= 2.0;
        CHECK(second_moment(doubled) == doctest::Approx(8.0 * second_moment(beam)).epsilon(1e-12));
    }
}

TEST_CASE("region_area is bilinear") {
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        PlateRegion region{oracle::log_uniform(rng, 1e-6, 1e-3),
                           oracle::log_uniform(rng, 1e-6, 1e-3), 1e-6};
        const double alpha = oracle::log_uniform(rng, 0.1, 10.0);
        const double beta = oracle::log_uniform(rng, 0.1, 10.0);
        PlateRegion scaled{alpha * region.length, beta * region.width, region.gap};
        CHECK(region_area(scaled) ==
              doctest::Approx(alpha * beta * region_area(region)).epsilon(1e-12));
    }
}

TEST_CASE("invariant violations are rejected by name") {
    CHECK_THROWS_AS(region_area({0.0, 1.0, 1.0}), PhysicsError);
    CHECK_THROWS_AS(region_area({1.0, 1.0, 0.0}), NonPositiveGap);
    CHECK_THROWS_AS(second_moment({1.0, 1.0, -1.0}), PhysicsError);
    CHECK_THROWS_AS(validate(Material{"x", -1.0, 0.0, 0.0, 1.0}), PhysicsError);
    CHECK_THROWS_AS(validate(Material{"x", 1e9, 0.0, 0.0, 0.5}), PhysicsError);
}

TEST_CASE("unit conversions are exact inverses") {
    CHECK(units::from_um(1.5) == 1.5e-6);
    CHECK(units::to_pF(units::from_pF(0.118)) == doctest::Approx(0.118).epsilon(1e-15));
    CHECK(units::from_GPa(70.0) == 70e9);
    CHECK(units::from_MPa_per_um(1.0) == 1e12);
}
