#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dgcap/errors.hpp"
#include "dgcap/profile.hpp"
#include "dgcap/reflow.hpp"
#include "dgcap/units.hpp"

using namespace dgcap;

namespace {

ResistStack flat_stack(double thickness_um, double motif_um) {
    ResistStack s;
    s.layer_thicknesses = {units::from_um(thickness_um)};
    s.motif_width = units::from_um(motif_um);
    return s;
}

ThermalCycle cycle_at(double peak_c) { return {peak_c, 117.5, 335.0}; }

TriLayerSpec reference_stack(double motif_um) {
    TriLayerSpec spec;
    spec.motif_width = units::from_um(motif_um);
    spec.cavity_depth = units::from_um(4.5);
    spec.layers[0] = {units::from_um(4.5), cycle_at(350)};
    spec.layers[1] = {units::from_um(1.0), cycle_at(350)};
    spec.layers[2] = {units::from_um(0.5), cycle_at(350)};
    return spec;
}

}  // namespace

TEST_CASE("peak growth factor follows the thermal window") {
    CHECK(peak_growth_factor(cycle_at(90)) == 0.0);
    CHECK(peak_growth_factor(cycle_at(120)) == doctest::Approx(0.0114943).epsilon(1e-4));
    CHECK(peak_growth_factor(cycle_at(350)) == 1.0);
    CHECK(peak_growth_factor(cycle_at(500)) == 1.0);
    CHECK_THROWS_AS(peak_growth_factor({400.0, 335.0, 117.5}), PhysicsError);
}

TEST_CASE("peak growth is monotone in temperature") {
    double prev = -1.0;
    for (double t = 20.0; t <= 400.0; t += 10.0) {
        const double g = peak_growth_factor(cycle_at(t));
        CHECK(g >= prev);
        prev = g;
    }
}

TEST_CASE("merge transition width") {
    ProfileParams params;
    CHECK(units::to_um(merge_transition_width(flat_stack(3.0, 600.0), params)) ==
          doctest::Approx(150.0).epsilon(1e-12));
    ResistStack on_cavity = flat_stack(3.0, 600.0);
    on_cavity.cavity_depth = units::from_um(4.5);
    on_cavity.on_cavity = true;
    CHECK(units::to_um(merge_transition_width(on_cavity, params)) ==
          doctest::Approx(225.0).epsilon(1e-12));
}

TEST_CASE("maxima phenomenology: wide motifs grow two beads, narrow ones merge") {
    ProfileParams params;
    // large motif, saturated: exactly 2 local maxima
    CHECK(count_local_maxima(reflow_profile(flat_stack(3.0, 600.0), cycle_at(350), params,
                                            513)) == 2);
    // merge-boundary motif: planar
    CHECK(count_local_maxima(reflow_profile(flat_stack(3.0, 150.0), cycle_at(350), params,
                                            513)) <= 1);
    // below the growth onset: flat lithographic top
    CHECK(count_local_maxima(reflow_profile(flat_stack(3.0, 600.0), cycle_at(90), params,
                                            513)) == 0);
}

TEST_CASE("maxima count never exceeds two") {
    ProfileParams params;
    for (double motif : {60.0, 150.0, 151.0, 300.0, 600.0, 1200.0})
        for (double t : {90.0, 120.0, 200.0, 350.0}) {
            const int maxima = count_local_maxima(
                reflow_profile(flat_stack(3.0, motif), cycle_at(t), params, 513));
            CHECK(maxima >= 0);
            CHECK(maxima <= 2);
            const bool expect_two =
                motif > 150.0 && peak_growth_factor(cycle_at(t)) > 0.0;
            CHECK(maxima == (expect_two ? 2 : 0));
        }
}

TEST_CASE("profiles are symmetric, non-negative and vanish at the span ends") {
    ProfileParams params;
    const HeightProfile p = reflow_profile(flat_stack(3.0, 600.0), cycle_at(350), params, 512);
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(p.heights[i] == p.heights[n - 1 - i]); // mirrored construction
        CHECK(p.heights[i] >= 0.0);
    }
    CHECK(p.heights.front() == 0.0);
    CHECK(p.heights.back() == 0.0);
}

TEST_CASE("bead height is non-decreasing in temperature") {
    ProfileParams params;
    double prev = -1.0;
    for (double t : {90.0, 120.0, 160.0, 200.0, 260.0, 320.0, 350.0, 380.0}) {
        const double delta = peak_center_height_delta(
            reflow_profile(flat_stack(3.0, 600.0), cycle_at(t), params, 513));
        CHECK(delta >= prev);
        prev = delta;
    }
}

TEST_CASE("peak-centre delta is non-decreasing in motif width") {
    ProfileParams params;
    double prev = -1.0;
    for (double motif : {100.0, 150.0, 200.0, 300.0, 450.0, 600.0, 900.0}) {
        const double delta = peak_center_height_delta(
            reflow_profile(flat_stack(3.0, motif), cycle_at(350), params, 513));
        CHECK(delta >= prev);
        prev = delta;
    }
}

TEST_CASE("tri-layer process grows the reference stack") {
    const HeightProfile p = tri_layer_process(reference_stack(800.0));
    CHECK(count_local_maxima(p) == 2);

    // plateau = cavity fill + two layers = 6.0 um, beads ~1.34 um above it
    const double centre = units::to_um(p.value_at(p.span() / 2.0));
    CHECK(centre == doctest::Approx(6.0).epsilon(1e-9));
    const double peak =
        units::to_um(*std::max_element(p.heights.begin(), p.heights.end()));
    CHECK(peak == doctest::Approx(7.344).epsilon(1e-2));
}

TEST_CASE("tri-layer validation") {
    TriLayerSpec spec = reference_stack(800.0);
    spec.layers[0].thickness = units::from_um(2.0); // cannot fill a 4.5 um cavity
    CHECK_THROWS_AS(tri_layer_process(spec), PhysicsError);

    spec = reference_stack(800.0);
    spec.cavity_depth = 0.0;
    CHECK_THROWS_AS(tri_layer_process(spec), PhysicsError);
}

TEST_CASE("a missing third layer leaves strictly lower beads") {
    TriLayerSpec full = reference_stack(800.0);
    TriLayerSpec two_layer = full;
    two_layer.layers[2].thickness = 0.0;
    const double full_peak = peak_center_height_delta(tri_layer_process(full));
    const double short_peak = peak_center_height_delta(tri_layer_process(two_layer));
    CHECK(short_peak > 0.0);
    CHECK(short_peak < full_peak);
}

TEST_CASE("wider cavity motifs separate the beads from the centre more") {
    const double narrow = peak_center_height_delta(tri_layer_process(reference_stack(520.0)));
    const double wide = peak_center_height_delta(tri_layer_process(reference_stack(820.0)));
    CHECK(narrow > 0.0);
    CHECK(wide > narrow);
}

TEST_CASE("resample_centered crops the motif window") {
    const HeightProfile p = tri_layer_process(reference_stack(800.0));
    const HeightProfile window = resample_centered(p, units::from_um(800.0), 257);
    CHECK(window.x_start == 0.0);
    CHECK(window.span() == doctest::Approx(units::from_um(800.0)).epsilon(1e-12));
    // window starts at the left bead centre: full plateau + bead there
    CHECK(units::to_um(window.heights.front()) == doctest::Approx(7.344).epsilon(1e-2));
    CHECK(units::to_um(window.value_at(units::from_um(400.0)))
          == doctest::Approx(6.0).epsilon(1e-9));

    CHECK_THROWS_AS(resample_centered(p, units::from_um(2000.0), 257), SpanMismatch);
}
