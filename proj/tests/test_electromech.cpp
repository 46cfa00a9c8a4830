#include <doctest.h>

#include <cmath>
#include <random>

#include "dgcap/constants.hpp"
#include "dgcap/electromech.hpp"
#include "dgcap/errors.hpp"
#include "dgcap/units.hpp"

#include "oracle_helpers.hpp"

using namespace dgcap;

namespace {

// Effective spring constant recovered by inverting the pull-in relation at
// the reference device's 12 V / 4.5 um / 3.2e-8 m^2 operating point.
const LumpedActuator kReferenceActuator{1.511, units::from_um(4.5), 3.2e-8,
                                        kVacuumPermittivity};

}  // namespace

TEST_CASE("parallel plate capacitance") {
    CHECK(units::to_pF(parallel_plate_capacitance(2.0e-8, units::from_um(1.5),
                                                  kVacuumPermittivity)) ==
          doctest::Approx(0.11805333).epsilon(1e-6));
    CHECK(units::to_pF(parallel_plate_capacitance(2.0e-8, units::from_um(0.1),
                                                  kVacuumPermittivity)) ==
          doctest::Approx(1.7708).epsilon(1e-6));
    // 1/d scaling
    const double c1 = parallel_plate_capacitance(3e-8, 2e-6, kVacuumPermittivity);
    const double c2 = parallel_plate_capacitance(3e-8, 4e-6, kVacuumPermittivity);
    CHECK(c2 == doctest::Approx(c1 / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(parallel_plate_capacitance(1e-8, 0.0, kVacuumPermittivity),
                    NonPositiveGap);
}

TEST_CASE("electrostatic force") {
    CHECK(electrostatic_force(0.0, 3.2e-8, 4.5e-6, 1e-6, kVacuumPermittivity) == 0.0);
    // near-equilibrium point of the reference actuator: F_el ~ k x
    const double f =
        electrostatic_force(10.6, 3.2e-8, units::from_um(4.5), units::from_um(0.75),
                            kVacuumPermittivity);
    CHECK(f == doctest::Approx(1.511 * 0.75e-6).epsilon(2e-3));
    // V^2 dependence
    const double f2 =
        electrostatic_force(21.2, 3.2e-8, units::from_um(4.5), units::from_um(0.75),
                            kVacuumPermittivity);
    CHECK(f2 == doctest::Approx(4.0 * f).epsilon(1e-12));
    CHECK_THROWS_AS(
        electrostatic_force(1.0, 3.2e-8, 4.5e-6, 4.5e-6, kVacuumPermittivity), GapClosed);
}

TEST_CASE("fixed-fixed spring constant") {
    const BeamGeometry beam{units::from_um(800), units::from_um(80), units::from_um(2)};
    CHECK(fixed_fixed_spring_constant(beam, 70e9) == doctest::Approx(1.4).epsilon(1e-9));

    BeamGeometry thick = beam;
    thick.thickness = units::from_um(4);
    CHECK(fixed_fixed_spring_constant(thick, 70e9) ==
          doctest::Approx(8.0 * 1.4).epsilon(1e-9));

    BeamGeometry longer = beam;
    longer.length *= 2.0;
    CHECK(fixed_fixed_spring_constant(longer, 70e9) ==
          doctest::Approx(1.4 / 8.0).epsilon(1e-9));
}

TEST_CASE("pull-in displacement is a third of the gap") {
    CHECK(pull_in_displacement(units::from_um(4.5)) == doctest::Approx(1.5e-6).epsilon(1e-15));
    CHECK(pull_in_displacement(3e-6) == doctest::Approx(1e-6).epsilon(1e-15));
    CHECK(pull_in_displacement(0.3e-6) == doctest::Approx(0.1e-6).epsilon(1e-15));
}

TEST_CASE("pull-in voltage of the reference device") {
    CHECK(pull_in_voltage(kReferenceActuator) == doctest::Approx(12.0).epsilon(0.1 / 12.0));

    LumpedActuator released = kReferenceActuator;
    released.gap = units::from_um(7.0);
    CHECK(pull_in_voltage(released) == doctest::Approx(23.3).epsilon(0.3 / 23.3));

    // d^(3/2) law: quadrupling the gap multiplies V_PI by 8
    LumpedActuator wide = kReferenceActuator;
    wide.gap *= 4.0;
    CHECK(pull_in_voltage(wide) ==
          doctest::Approx(8.0 * pull_in_voltage(kReferenceActuator)).epsilon(1e-12));
}

TEST_CASE("voltage at displacement") {
    CHECK(voltage_at_displacement(kReferenceActuator, 0.0) == 0.0);
    CHECK(voltage_at_displacement(kReferenceActuator, units::from_um(0.75)) ==
          doctest::Approx(10.6063).epsilon(1e-4));
    CHECK_THROWS_AS(voltage_at_displacement(kReferenceActuator, units::from_um(4.5)),
                    GapClosed);
}

TEST_CASE("closed forms coincide at the fold point") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const LumpedActuator a = oracle::random_actuator(rng);
        const double at_fold = voltage_at_displacement(a, a.gap / 3.0);
        CHECK(oracle::rel_err(at_fold, pull_in_voltage(a)) < 1e-12);
    }
}

TEST_CASE("equilibrium at zero bias") {
    const EquilibriumResult eq = solve_equilibrium(kReferenceActuator, 0.0);
    CHECK(eq.displacement == 0.0);
    CHECK(eq.stable);
}

TEST_CASE("equilibrium reproduces the hand-solved operating point") {
    const EquilibriumResult eq = solve_equilibrium(kReferenceActuator, 10.6);
    CHECK(units::to_um(eq.displacement) == doctest::Approx(0.75).epsilon(2e-2));
    CHECK(eq.stable);
    // force balance at the root, scale-relative
    const double fx = kReferenceActuator.spring_constant * eq.displacement;
    CHECK(eq.residual_force <= 1e-15 * std::max(fx, 1e-30));
}

TEST_CASE("equilibrium just below the fold approaches d/3") {
    const double v_pi = pull_in_voltage(kReferenceActuator);
    const EquilibriumResult eq = solve_equilibrium(kReferenceActuator, v_pi - 1e-9);
    const double fold = kReferenceActuator.gap / 3.0;
    CHECK(eq.displacement < fold);
    CHECK(oracle::rel_err(eq.displacement, fold) < 1e-4);
    CHECK(eq.stable);
}

TEST_CASE("at the fold the solver reports d/3, unstable") {
    const double v_pi = pull_in_voltage(kReferenceActuator);
    const EquilibriumResult eq = solve_equilibrium(kReferenceActuator, v_pi);
    CHECK(eq.displacement == kReferenceActuator.gap / 3.0);
    CHECK_FALSE(eq.stable);
}

TEST_CASE("beyond the fold the solver throws PullIn") {
    const double v_pi = pull_in_voltage(kReferenceActuator);
    CHECK_THROWS_AS(solve_equilibrium(kReferenceActuator, v_pi * 1.0001), PullIn);
}

TEST_CASE("round trip: displacement -> voltage -> displacement") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
        const LumpedActuator a = oracle::random_actuator(rng);
        const double x = u(rng) * a.gap / 3.0;
        const double v = voltage_at_displacement(a, x);
        const EquilibriumResult eq = solve_equilibrium(a, v);
        CHECK(oracle::rel_err(eq.displacement, x) < 1e-9);
    }
}

TEST_CASE("displacement is strictly increasing in voltage") {
    const double v_pi = pull_in_voltage(kReferenceActuator);
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double v = v_pi * static_cast<double>(i) / 40.0 * 0.999;
        const EquilibriumResult eq = solve_equilibrium(kReferenceActuator, v);
        if (i > 0) CHECK(eq.displacement > prev);
        prev = eq.displacement;
    }
}

TEST_CASE("stability criterion holds at every stable root") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(0.05, 0.995);
    for (int i = 0; i < 100; ++i) {
        const LumpedActuator a = oracle::random_actuator(rng);
        const double v = u(rng) * pull_in_voltage(a);
        const EquilibriumResult eq = solve_equilibrium(a, v);
        REQUIRE(eq.stable);
        const double r = a.gap - eq.displacement;
        CHECK(a.spring_constant * r * r * r >
              a.permittivity * a.actuation_area * v * v);
        CHECK(eq.displacement < a.gap / 3.0);
        // scale-relative force balance at every returned root
        CHECK(eq.residual_force <=
              1e-15 * std::max(a.spring_constant * eq.displacement, 1e-30));
    }
}

TEST_CASE("brute-force force-balance scan brackets the solver root") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.05, 0.99);
    for (int i = 0; i < 20; ++i) {
        const LumpedActuator a = oracle::random_actuator(rng);
        const double v = u(rng) * pull_in_voltage(a);
        const auto [lo, hi] = oracle::force_balance_bracket(a, v, 1000000);
        REQUIRE(hi > 0.0);
        const EquilibriumResult eq = solve_equilibrium(a, v);
        CHECK(eq.displacement >= lo);
        CHECK(eq.displacement <= hi);
    }
}

TEST_CASE("tuning range") {
    CHECK(tuning_range(units::from_pF(0.12), units::from_pF(1.77)) ==
          doctest::Approx(1375.0).epsilon(1e-9));
    CHECK(tuning_range(units::from_pF(0.11805333), units::from_pF(1.7708)) ==
          doctest::Approx(1400.0).epsilon(1e-6));
    CHECK(tuning_range(1e-12, 1e-12) == 0.0);
    CHECK_THROWS_AS(tuning_range(0.0, 1e-12), NonPositiveCapacitance);
}
