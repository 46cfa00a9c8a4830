#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dgcap/profile.hpp"

namespace dgcap {

// Patterned photoresist stack prepared for a reflow cycle. Thicknesses are in
// deposition order; when on_cavity is set, heights are measured from the
// cavity floor and the first entry is the (trimmed) cavity fill.
struct ResistStack {
    std::vector<double> layer_thicknesses; // m, each > 0
    double motif_width = 0.0;              // m
    double cavity_depth = 0.0;             // m, 0 = flat substrate
    bool on_cavity = false;

    double total_thickness() const;
};

// Cure cycle in nitrogen. Edge beads nucleate at the onset temperature and
// stop growing at saturation.
struct ThermalCycle {
    double peak_temperature = 0.0;        // degC
    double onset_temperature = 117.5;     // degC
    double saturation_temperature = 335.0;// degC
};

// Calibration knobs of the phenomenological surface model. The defaults place
// the merge boundary of a 3 um flat stack at a 150 um motif.
struct ProfileParams {
    double peak_width_fraction = 0.08;     // bead width / motif width
    double merge_coefficient = 50.0;       // transition width per unit thickness
    double cavity_merge_multiplier = 1.5;  // transition widening on a cavity
    double max_peak_height_fraction = 0.35;// bead height ceiling / total thickness
};

// One layer of the tri-layer sequence: a thickness plus its cure cycle.
struct LayerSpec {
    double thickness = 0.0; // m
    ThermalCycle cycle;
};

struct TriLayerSpec {
    double motif_width = 0.0;  // m
    double cavity_depth = 0.0; // m, > 0
    std::array<LayerSpec, 3> layers;
    ProfileParams params;
    std::size_t n_samples = 257;
};

void validate(const ResistStack& stack);
void validate(const ThermalCycle& cycle);
void validate(const ProfileParams& params);

// Fraction of the saturated edge-bead size reached by a cycle:
// clamp((T_peak - T_onset) / (T_sat - T_onset), 0, 1).
double peak_growth_factor(const ThermalCycle& cycle);

// Motif width below which the two edge beads coalesce into one smooth
// plateau: merge_coefficient * total thickness, widened on a cavity.
double merge_transition_width(const ResistStack& stack, const ProfileParams& params);

// Surface after patterning and one cure cycle: a plateau at the stack
// thickness with raised-cosine edge beads when the motif is wider than the
// merge transition, tapering smoothly to zero outside the motif.
HeightProfile reflow_profile(const ResistStack& stack, const ThermalCycle& cycle,
                             const ProfileParams& params, std::size_t n_samples);

// max(h) - h(centre); zero for merged or flat profiles.
double peak_center_height_delta(const HeightProfile& profile);

// Cavity fill (trimmed flush to the rim) followed by two patterned-and-cured
// layers; each cure reflows the whole resist body, so beads only grow.
// Heights are relative to the cavity floor.
HeightProfile tri_layer_process(const TriLayerSpec& spec);

}  // namespace dgcap
