#include "dgcap/design_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dgcap/constants.hpp"
#include "dgcap/electromech.hpp"
#include "dgcap/errors.hpp"
#include "dgcap/units.hpp"

namespace dgcap {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw SchemaError(path + ": " + message);
}

void reject_unknown_keys(const json& object, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items())
        if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

double require_number(const json& object, const std::string& path, const std::string& key) {
    if (!object.contains(key))
        fail(path + "." + key, "required key missing (physics-critical, no default applied)");
    if (!object[key].is_number()) fail(path + "." + key, "expected a number");
    return object[key].get<double>();
}

double optional_number(const json& object, const std::string& path, const std::string& key,
                       double fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_number()) fail(path + "." + key, "expected a number");
    return object[key].get<double>();
}

std::size_t optional_count(const json& object, const std::string& path, const std::string& key,
                           std::size_t fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_number_unsigned()) fail(path + "." + key, "expected a positive integer");
    return object[key].get<std::size_t>();
}

void parse_design_section(const json& section, DesignBundle& bundle) {
    reject_unknown_keys(section, "design",
                        {"capacitive_length_um", "capacitive_width_um", "capacitive_gap_um",
                         "actuation_length_um", "actuation_width_um", "actuation_gap_um",
                         "actuation_pads", "beam_length_um", "beam_width_um",
                         "beam_thickness_um", "dimple_residual_gap_um", "k_N_per_m"});

    auto& d = bundle.design;
    d.capacitive_region.length = units::from_um(require_number(section, "design", "capacitive_length_um"));
    d.capacitive_region.width = units::from_um(require_number(section, "design", "capacitive_width_um"));
    d.capacitive_region.gap = units::from_um(require_number(section, "design", "capacitive_gap_um"));

    const double pads = require_number(section, "design", "actuation_pads");
    if (pads != 1.0 && pads != 2.0) fail("design.actuation_pads", "must be 1 or 2");
    d.actuation_region.length =
        pads * units::from_um(require_number(section, "design", "actuation_length_um"));
    d.actuation_region.width = units::from_um(require_number(section, "design", "actuation_width_um"));
    d.actuation_region.gap = units::from_um(require_number(section, "design", "actuation_gap_um"));

    d.beam.length = units::from_um(require_number(section, "design", "beam_length_um"));
    d.beam.width = units::from_um(require_number(section, "design", "beam_width_um"));
    d.beam.thickness = units::from_um(require_number(section, "design", "beam_thickness_um"));
    d.dimple_residual_gap =
        units::from_um(require_number(section, "design", "dimple_residual_gap_um"));

    if (section.contains("k_N_per_m")) {
        if (!section["k_N_per_m"].is_number()) fail("design.k_N_per_m", "expected a number");
        d.effective_spring_constant = section["k_N_per_m"].get<double>();
        bundle.spring_explicit = true;
    }
}

void parse_material_section(const json& section, DesignBundle& bundle) {
    reject_unknown_keys(section, "material",
                        {"name", "youngs_modulus_GPa", "residual_stress_MPa",
                         "stress_gradient_MPa_per_um", "relative_permittivity"});
    auto& m = bundle.material;
    if (section.contains("name")) {
        if (!section["name"].is_string()) fail("material.name", "expected a string");
        m.name = section["name"].get<std::string>();
    }
    m.youngs_modulus =
        units::from_GPa(require_number(section, "material", "youngs_modulus_GPa"));
    m.residual_stress =
        units::from_MPa(optional_number(section, "material", "residual_stress_MPa", 0.0));
    m.stress_gradient = units::from_MPa_per_um(
        optional_number(section, "material", "stress_gradient_MPa_per_um", 0.0));
    m.relative_permittivity =
        optional_number(section, "material", "relative_permittivity", 1.0);
}

void parse_solver_section(const json& section, DesignBundle& bundle) {
    reject_unknown_keys(section, "solver", {"fem_elements", "cv_points", "profile_samples"});
    bundle.solver.fem_elements =
        optional_count(section, "solver", "fem_elements", bundle.solver.fem_elements);
    bundle.solver.cv_points =
        optional_count(section, "solver", "cv_points", bundle.solver.cv_points);
    bundle.solver.profile_samples =
        optional_count(section, "solver", "profile_samples", bundle.solver.profile_samples);
}

void parse_profile_section(const json& section, DesignBundle& bundle) {
    reject_unknown_keys(section, "profile",
                        {"motif_width_um", "cavity_depth_um", "layers", "onset_temperature_C",
                         "saturation_temperature_C", "peak_width_fraction", "merge_coefficient",
                         "cavity_merge_multiplier", "max_peak_height_fraction"});
    auto& p = bundle.profile;
    p.motif_width = units::from_um(require_number(section, "profile", "motif_width_um"));
    p.cavity_depth = units::from_um(require_number(section, "profile", "cavity_depth_um"));

    if (!section.contains("layers") || !section["layers"].is_array())
        fail("profile.layers", "expected an array of 3 layer objects");
    const auto& layers = section["layers"];
    if (layers.size() != 3) fail("profile.layers", "exactly 3 layers required");

    const double onset = optional_number(section, "profile", "onset_temperature_C", 117.5);
    const double saturation =
        optional_number(section, "profile", "saturation_temperature_C", 335.0);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string path = "profile.layers[" + std::to_string(i) + "]";
        reject_unknown_keys(layers[i], path, {"thickness_um", "peak_temperature_C"});
        p.layers[i].thickness = units::from_um(require_number(layers[i], path, "thickness_um"));
        p.layers[i].cycle.peak_temperature =
            require_number(layers[i], path, "peak_temperature_C");
        p.layers[i].cycle.onset_temperature = onset;
        p.layers[i].cycle.saturation_temperature = saturation;
    }

    p.params.peak_width_fraction = optional_number(section, "profile", "peak_width_fraction",
                                                   p.params.peak_width_fraction);
    p.params.merge_coefficient =
        optional_number(section, "profile", "merge_coefficient", p.params.merge_coefficient);
    p.params.cavity_merge_multiplier = optional_number(
        section, "profile", "cavity_merge_multiplier", p.params.cavity_merge_multiplier);
    p.params.max_peak_height_fraction = optional_number(
        section, "profile", "max_peak_height_fraction", p.params.max_peak_height_fraction);
    p.n_samples = bundle.solver.profile_samples;
}

void parse_release_section(const json& section, DesignBundle& bundle) {
    reject_unknown_keys(section, "release", {"calibrate_center_deflection_um"});
    if (section.contains("calibrate_center_deflection_um")) {
        bundle.release.calibrate = true;
        bundle.release.target_center_deflection = units::from_um(
            require_number(section, "release", "calibrate_center_deflection_um"));
    }
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

}  // namespace

DesignBundle paper_device_preset() {
    DesignBundle bundle;
    bundle.design_id = "paper-device";

    bundle.design.capacitive_region = {units::from_um(250), units::from_um(80), units::from_um(1.5)};
    bundle.design.actuation_region = {units::from_um(400), units::from_um(80), units::from_um(4.5)};
    bundle.design.beam = {units::from_um(800), units::from_um(80), units::from_um(2)};
    bundle.design.dimple_residual_gap = units::from_um(0.1);
    bundle.design.effective_spring_constant = 1.511;
    bundle.spring_explicit = true;

    bundle.material.name = "SiO2/Au membrane";
    bundle.material.youngs_modulus = units::from_GPa(70);
    bundle.material.residual_stress = 0.0;
    bundle.material.stress_gradient = 0.0;
    bundle.material.relative_permittivity = 1.0;

    // Tri-layer stack calibrated so the released membrane lands on the
    // as-built gap targets: plateau 6.0 um, edge beads ~7.3 um.
    bundle.profile.motif_width = units::from_um(800);
    bundle.profile.cavity_depth = units::from_um(4.5);
    bundle.profile.layers[0] = {units::from_um(4.5), {350.0}};
    bundle.profile.layers[1] = {units::from_um(1.0), {350.0}};
    bundle.profile.layers[2] = {units::from_um(0.5), {350.0}};
    bundle.profile.n_samples = bundle.solver.profile_samples;
    bundle.profile_given = true;

    bundle.release.calibrate = true;
    bundle.release.target_center_deflection = units::from_um(-4.5);
    return bundle;
}

DesignBundle load_design_from_string(const std::string& text, const std::string& design_id) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("design file line " + std::to_string(line_of_byte(text, e.byte)) +
                          ": " + e.what());
    }
    if (!doc.is_object()) throw SchemaError("design file: top level must be an object");

    reject_unknown_keys(doc, "$",
                        {"schema_version", "design_id", "design", "material", "solver",
                         "profile", "release"});
    if (!doc.contains("schema_version")) fail("$.schema_version", "required key missing");
    if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != 1)
        fail("$.schema_version", "unsupported version (expected 1)");
    if (!doc.contains("design") || !doc["design"].is_object())
        fail("$.design", "required section missing");

    const DesignBundle defaults = paper_device_preset();
    DesignBundle bundle;
    bundle.design_id = design_id;
    if (doc.contains("design_id")) {
        if (!doc["design_id"].is_string()) fail("$.design_id", "expected a string");
        bundle.design_id = doc["design_id"].get<std::string>();
    }

    // Optional sections fall back to the preset; the design geometry never does.
    bundle.material = defaults.material;
    bundle.solver = defaults.solver;

    parse_design_section(doc["design"], bundle);
    if (doc.contains("solver")) parse_solver_section(doc["solver"], bundle);
    if (doc.contains("material")) parse_material_section(doc["material"], bundle);
    if (doc.contains("profile")) {
        parse_profile_section(doc["profile"], bundle);
        bundle.profile_given = true;
    } else {
        bundle.profile = defaults.profile;
        bundle.profile.n_samples = bundle.solver.profile_samples;
        bundle.profile_given = false;
    }
    if (doc.contains("release")) parse_release_section(doc["release"], bundle);

    if (!bundle.spring_explicit) {
        // Derive k = 192 E I / L^3; requires an explicit material section.
        if (!doc.contains("material"))
            fail("$.material",
                 "required when design.k_N_per_m is absent (spring constant is derived from "
                 "youngs_modulus and the beam section)");
        bundle.design.effective_spring_constant =
            fixed_fixed_spring_constant(bundle.design.beam, bundle.material.youngs_modulus);
    }

    validate(bundle.design);
    validate(bundle.material);
    bundle.warnings = design_warnings(bundle.design);
    return bundle;
}

DesignBundle load_design(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open design file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();

    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    return load_design_from_string(buffer.str(), stem);
}

HeightProfile initial_gap_profile(const DesignBundle& bundle) {
    if (bundle.profile_given) {
        const HeightProfile surface = tri_layer_process(bundle.profile);
        return resample_centered(surface, bundle.design.beam.length,
                                 bundle.solver.profile_samples);
    }
    HeightProfile flat;
    flat.x_start = 0.0;
    flat.x_step = bundle.design.beam.length /
                  static_cast<double>(bundle.solver.profile_samples - 1);
    flat.heights.assign(bundle.solver.profile_samples, bundle.design.actuation_region.gap);
    return flat;
}

std::string report_json(const DesignReport& report, const std::string& design_id) {
    // The rounded tuning-range variant recomputes TR from the capacitances
    // quoted to two decimals in pF; the exact figure is reported alongside.
    const double c0_rounded = std::round(units::to_pF(report.c_zero) * 100.0) / 100.0;
    const double cmax_rounded = std::round(units::to_pF(report.c_max) * 100.0) / 100.0;

    ordered_json out;
    out["design_id"] = design_id;
    out["c_zero_pF"] = units::to_pF(report.c_zero);
    out["c_max_pF"] = units::to_pF(report.c_max);
    out["tr_exact_pct"] = report.tuning_range;
    out["tr_paper_rounded_pct"] = tuning_range(c0_rounded, cmax_rounded);
    out["v_pi_V"] = report.pull_in_voltage;
    out["dimple_contact_voltage_V"] = report.dimple_contact_voltage;
    out["pull_in_margin_um"] = units::to_um(report.pull_in_margin);
    return out.dump(2) + "\n";
}

}  // namespace dgcap
