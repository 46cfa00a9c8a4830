#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgcap/device.hpp"
#include "dgcap/geometry.hpp"
#include "dgcap/profile.hpp"
#include "dgcap/reflow.hpp"

namespace dgcap {

struct SolverSettings {
    std::size_t fem_elements = 64;
    std::size_t cv_points = 121;
    std::size_t profile_samples = 257;
};

struct ReleaseSettings {
    bool calibrate = false;                 // bisect the stress gradient when set
    double target_center_deflection = 0.0;  // m, used in calibration mode
};

// A fully validated design document: geometry in SI, preset defaults applied
// to optional sections, invariants already enforced.
struct DesignBundle {
    std::string design_id;
    DualGapDesign design;
    Material material;
    SolverSettings solver;
    TriLayerSpec profile;
    bool profile_given = false;  // profile section present (or preset)
    ReleaseSettings release;
    bool spring_explicit = false;  // k given directly rather than via 192EI/L^3
    std::vector<std::string> warnings;
};

// The built-in reference device: dual-gap capacitor with a 250x80 um
// capacitive area at 1.5 um, two 200x80 um actuation pads at 4.5 um, an
// 800x80x2 um beam, 0.1 um dimples and k = 1.511 N/m.
DesignBundle paper_device_preset();

// Parses and validates a design file. Unknown keys and missing
// physics-critical fields are rejected by name; parse errors carry line
// numbers. Optional sections fall back to the preset defaults.
DesignBundle load_design(const std::string& path);
DesignBundle load_design_from_string(const std::string& text, const std::string& design_id);

// Initial gap topology for release analyses: the tri-layer surface re-sampled
// onto the beam span when a profile section exists, otherwise flat at the
// actuation gap.
HeightProfile initial_gap_profile(const DesignBundle& bundle);

// Design report as a JSON document (c_zero_pF, c_max_pF, tr_exact_pct,
// tr_paper_rounded_pct, v_pi_V, dimple_contact_voltage_V, pull_in_margin_um).
std::string report_json(const DesignReport& report, const std::string& design_id);

}  // namespace dgcap
