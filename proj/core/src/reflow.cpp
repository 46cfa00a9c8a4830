#include "dgcap/reflow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dgcap/constants.hpp"
#include "dgcap/errors.hpp"

namespace dgcap {

double ResistStack::total_thickness() const {
    double sum = 0.0;
    for (double t : layer_thicknesses) sum += t;
    return sum;
}

void validate(const ResistStack& stack) {
    if (stack.layer_thicknesses.empty())
        throw PhysicsError("resist stack: at least one layer required");
    for (double t : stack.layer_thicknesses)
        if (!(t > 0.0)) throw PhysicsError("resist stack: layer thickness must be > 0");
    if (!(stack.motif_width > 0.0))
        throw PhysicsError("resist stack: motif_width must be > 0");
    if (stack.cavity_depth < 0.0)
        throw PhysicsError("resist stack: cavity_depth must be >= 0");
    if (stack.on_cavity != (stack.cavity_depth > 0.0))
        throw PhysicsError("resist stack: on_cavity must match cavity_depth > 0");
}

void validate(const ThermalCycle& cycle) {
    if (!(cycle.onset_temperature < cycle.saturation_temperature))
        throw PhysicsError("thermal cycle: onset must be below saturation");
    if (cycle.peak_temperature < kAmbientTemperatureC)
        throw PhysicsError("thermal cycle: peak temperature below ambient");
}

void validate(const ProfileParams& params) {
    if (!(params.peak_width_fraction > 0.0) || !(params.merge_coefficient > 0.0) ||
        !(params.cavity_merge_multiplier > 0.0) || !(params.max_peak_height_fraction > 0.0))
        throw PhysicsError("profile params: all parameters must be > 0");
}

double peak_growth_factor(const ThermalCycle& cycle) {
    validate(cycle);
    const double f = (cycle.peak_temperature - cycle.onset_temperature) /
                     (cycle.saturation_temperature - cycle.onset_temperature);
    return std::clamp(f, 0.0, 1.0);
}

double merge_transition_width(const ResistStack& stack, const ProfileParams& params) {
    validate(stack);
    validate(params);
    const double widening = stack.on_cavity ? params.cavity_merge_multiplier : 1.0;
    return params.merge_coefficient * stack.total_thickness() * widening;
}

namespace {

// Bead height above the plateau. Zero for merged motifs; approaches the
// max_peak_height_fraction ceiling for motifs far above the merge width.
double bead_height(double growth, double total_thickness, double motif_width,
                   double merge_width, const ProfileParams& params) {
    if (motif_width <= merge_width) return 0.0;
    return growth * params.max_peak_height_fraction * total_thickness *
           (motif_width / (motif_width + merge_width));
}

// Raised cosine of unit height: 1 at u = 0, 0 for |u| >= half_width.
double raised_cosine(double u, double half_width) {
    const double a = std::abs(u);
    if (a >= half_width) return 0.0;
    return 0.5 * (1.0 + std::cos(std::numbers::pi * a / half_width));
}

// Assembles the sampled profile. The motif occupies [margin, margin + W] of a
// span W + 2*margin with margin equal to the bead half-width; the plateau
// tapers to zero across the margins and the two beads sit on the motif edges.
// Samples are mirrored so h(x) == h(span - x) bit-exactly.
HeightProfile build_profile(double motif_width, double plateau, double bead, double half_width,
                            std::size_t n_samples) {
    const double span = motif_width + 2.0 * half_width;
    HeightProfile out;
    out.x_start = 0.0;
    out.x_step = span / static_cast<double>(n_samples - 1);
    out.heights.resize(n_samples);

    const double left_edge = half_width; // left motif edge = left bead centre
    for (std::size_t i = 0; i <= (n_samples - 1) / 2; ++i) {
        const double x = out.x_step * static_cast<double>(i);
        double h;
        if (x >= left_edge)
            h = plateau;
        else
            h = plateau * raised_cosine(left_edge - x, half_width);
        h += bead * raised_cosine(x - left_edge, half_width);
        out.heights[i] = h;
        out.heights[n_samples - 1 - i] = h;
    }
    return out;
}

}  // namespace

HeightProfile reflow_profile(const ResistStack& stack, const ThermalCycle& cycle,
                             const ProfileParams& params, std::size_t n_samples) {
    validate(stack);
    validate(params);
    if (n_samples < 16) throw PhysicsError("reflow_profile: at least 16 samples required");

    const double total = stack.total_thickness();
    const double merge = merge_transition_width(stack, params);
    const double growth = peak_growth_factor(cycle);
    const double bead = bead_height(growth, total, stack.motif_width, merge, params);
    const double half_width = params.peak_width_fraction * stack.motif_width / 2.0;
    return build_profile(stack.motif_width, total, bead, half_width, n_samples);
}

double peak_center_height_delta(const HeightProfile& profile) {
    validate(profile);
    const double peak = *std::max_element(profile.heights.begin(), profile.heights.end());
    const double centre = profile.value_at(profile.x_start + profile.span() / 2.0);
    return peak - centre;
}

HeightProfile tri_layer_process(const TriLayerSpec& spec) {
    validate(spec.params);
    if (!(spec.cavity_depth > 0.0))
        throw PhysicsError("tri_layer_process: cavity_depth must be > 0");
    if (!(spec.motif_width > 0.0))
        throw PhysicsError("tri_layer_process: motif_width must be > 0");
    if (spec.n_samples < 16)
        throw PhysicsError("tri_layer_process: at least 16 samples required");
    if (!(spec.layers[0].thickness >= spec.cavity_depth))
        throw PhysicsError("tri_layer_process: first layer too thin to fill the cavity");
    if (!(spec.layers[1].thickness > 0.0))
        throw PhysicsError("tri_layer_process: second layer thickness must be > 0");
    if (spec.layers[2].thickness < 0.0)
        throw PhysicsError("tri_layer_process: third layer thickness must be >= 0");

    // Layer 1 fills the cavity; the blanket etch-back trims it flush with the
    // rim, erasing any beads from its own cure.
    double running_thickness = spec.cavity_depth;
    double bead = 0.0;

    for (int layer = 1; layer < 3; ++layer) {
        const double t = spec.layers[static_cast<std::size_t>(layer)].thickness;
        if (t == 0.0) continue;
        running_thickness += t;
        ResistStack body;
        body.layer_thicknesses = {running_thickness};
        body.motif_width = spec.motif_width;
        body.cavity_depth = spec.cavity_depth;
        body.on_cavity = true;
        const double merge = merge_transition_width(body, spec.params);
        const double growth =
            peak_growth_factor(spec.layers[static_cast<std::size_t>(layer)].cycle);
        // Bead growth is irreversible: a cooler later cure cannot shrink it.
        bead = std::max(bead, bead_height(growth, running_thickness, spec.motif_width, merge,
                                          spec.params));
    }

    const double half_width = spec.params.peak_width_fraction * spec.motif_width / 2.0;
    return build_profile(spec.motif_width, running_thickness, bead, half_width, spec.n_samples);
}

}  // namespace dgcap
