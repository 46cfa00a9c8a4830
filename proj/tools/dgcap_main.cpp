// dgcap - dual-gap MEMS tunable-capacitor design toolkit.
//
// Subcommands: report, cv-sweep, release, profile. Exit codes: 0 success,
// 2 schema/input error, 3 physics-domain error, 4 numerical failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgcap/beam_fem.hpp"
#include "dgcap/constants.hpp"
#include "dgcap/csv.hpp"
#include "dgcap/design_io.hpp"
#include "dgcap/device.hpp"
#include "dgcap/errors.hpp"
#include "dgcap/units.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    std::string design_path;
    std::string preset;
    std::string out_path;
    bool json_output = false;
};

struct LoadedDesign {
    dgcap::DesignBundle bundle;
    std::string input_bytes; // digest source: file bytes or preset tag
};

LoadedDesign load(const GlobalOptions& options) {
    if (!options.design_path.empty() && !options.preset.empty())
        throw dgcap::SchemaError("give either --design or --preset, not both");
    if (options.design_path.empty() && options.preset.empty())
        throw dgcap::SchemaError("a design is required: --design <file> or --preset paper-device");

    LoadedDesign loaded;
    if (!options.preset.empty()) {
        if (options.preset != "paper-device")
            throw dgcap::SchemaError("unknown preset '" + options.preset + "'");
        loaded.bundle = dgcap::paper_device_preset();
        loaded.input_bytes = "preset:paper-device";
    } else {
        std::ifstream in(options.design_path, std::ios::binary);
        if (!in)
            throw dgcap::SchemaError("cannot open design file '" + options.design_path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        loaded.input_bytes = buffer.str();

        std::string stem = std::filesystem::path(options.design_path).stem().string();
        loaded.bundle = dgcap::load_design_from_string(loaded.input_bytes, stem);
    }
    for (const auto& w : loaded.bundle.warnings) std::cerr << "warning: " << w << "\n";
    return loaded;
}

std::string resolve_out(const std::string& out) {
    const char* dir = std::getenv("DGCAP_OUT_DIR");
    std::filesystem::path path(out);
    if (dir != nullptr && path.is_relative()) path = std::filesystem::path(dir) / path;
    return path.string();
}

std::string sibling_path(const std::string& csv_path, const std::string& suffix) {
    std::filesystem::path p(csv_path);
    p.replace_extension();
    return p.string() + suffix;
}

std::string manifest_text(const std::string& command, const std::string& digest_source,
                          const std::vector<std::string>& outputs,
                          const ordered_json& extras) {
    ordered_json manifest;
    manifest["command"] = command;
    manifest["input_digest"] = dgcap::digest_hex(digest_source);
    manifest["toolkit_version"] = dgcap::kToolkitVersion;
    manifest["timestamp_utc"] = dgcap::utc_timestamp();
    manifest["outputs"] = outputs;
    for (const auto& [key, value] : extras.items()) manifest[key] = value;
    return manifest.dump(2) + "\n";
}

ordered_json gap_stats(const dgcap::HeightProfile& gap, double span_start, double span_end) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < gap.size(); ++i) {
        const double x = gap.position(i) - gap.x_start;
        if (x < span_start || x > span_end) continue;
        lo = std::min(lo, gap.heights[i]);
        hi = std::max(hi, gap.heights[i]);
    }
    return {{"min_gap_um", dgcap::units::to_um(lo)}, {"max_gap_um", dgcap::units::to_um(hi)}};
}

int cmd_report(const GlobalOptions& options) {
    const LoadedDesign loaded = load(options);
    const dgcap::DesignReport report = dgcap::evaluate_design(loaded.bundle.design);
    std::cout << dgcap::report_json(report, loaded.bundle.design_id);
    return 0;
}

int cmd_cv_sweep(const GlobalOptions& options, double vmax, std::size_t points_flag) {
    if (options.out_path.empty()) throw dgcap::SchemaError("cv-sweep requires --out <path>");
    if (!(vmax > 0.0)) throw dgcap::SchemaError("--vmax must be > 0");

    const LoadedDesign loaded = load(options);
    const std::size_t points =
        (points_flag > 0) ? points_flag : loaded.bundle.solver.cv_points;
    if (points < 2) throw dgcap::SchemaError("--points must be >= 2");
    const dgcap::CVCurve curve =
        dgcap::trace_cv_curve(loaded.bundle.design, vmax, points, loaded.bundle.design_id);

    const std::string out = resolve_out(options.out_path);
    const std::string manifest_path = sibling_path(out, ".manifest.json");
    const std::string digest_source = loaded.input_bytes + "|cv-sweep|vmax=" +
                                      dgcap::format_number(vmax) +
                                      "|points=" + std::to_string(points);
    const std::string csv = dgcap::cv_curve_csv(curve);
    const std::string manifest = manifest_text(
        "cv-sweep", digest_source, {out, manifest_path},
        {{"rows", curve.points.size()}, {"fold_refined", curve.sweep.fold_refined}});

    dgcap::write_file_atomic(out, csv);
    dgcap::write_file_atomic(manifest_path, manifest);
    if (options.json_output)
        std::cout << manifest;
    else
        std::cout << "wrote " << out << " (" << curve.points.size() << " points)\n";
    return 0;
}

int cmd_release(const GlobalOptions& options, std::size_t elements_flag) {
    if (options.out_path.empty()) throw dgcap::SchemaError("release requires --out <path>");
    const LoadedDesign loaded = load(options);
    const dgcap::DesignBundle& bundle = loaded.bundle;

    const std::size_t elements =
        (elements_flag > 0) ? elements_flag : bundle.solver.fem_elements;
    if (elements < 8 || elements % 2 != 0)
        throw dgcap::SchemaError("--elements must be an even number >= 8");

    const dgcap::BeamMesh mesh =
        dgcap::build_mesh(bundle.design.beam, bundle.material, elements);

    dgcap::Material material = bundle.material;
    if (bundle.release.calibrate)
        material.stress_gradient = dgcap::calibrate_stress_gradient(
            mesh, material, bundle.release.target_center_deflection);

    const dgcap::DeflectionField field = dgcap::release_profile(mesh, material);
    const dgcap::HeightProfile initial = dgcap::initial_gap_profile(bundle);
    const dgcap::HeightProfile gap = dgcap::gap_function(mesh, field, initial);
    const double centre =
        dgcap::evaluate_deflection(mesh, field, bundle.design.beam.length / 2.0);

    const dgcap::DeviceLayout layout = dgcap::device_layout(bundle.design);
    ordered_json summary;
    summary["design_id"] = bundle.design_id;
    summary["center_deflection_um"] = dgcap::units::to_um(centre);
    summary["calibrated"] = bundle.release.calibrate;
    summary["stress_gradient_MPa_per_um"] =
        dgcap::units::to_MPa_per_um(material.stress_gradient);
    summary["capacitive_zone"] =
        gap_stats(gap, layout.capacitive_span.first, layout.capacitive_span.second);
    summary["actuation_zones"] = ordered_json::array();
    for (const auto& [a, b] : layout.actuation_spans)
        summary["actuation_zones"].push_back(gap_stats(gap, a, b));

    const std::string out = resolve_out(options.out_path);
    const std::string summary_path = sibling_path(out, ".summary.json");
    const std::string manifest_path = sibling_path(out, ".manifest.json");
    const std::string digest_source =
        loaded.input_bytes + "|release|elements=" + std::to_string(elements);

    const std::string csv = dgcap::release_csv(gap, mesh, field);
    const std::string summary_text = summary.dump(2) + "\n";
    const std::string manifest = manifest_text("release", digest_source,
                                               {out, summary_path, manifest_path}, {});

    dgcap::write_file_atomic(out, csv);
    dgcap::write_file_atomic(summary_path, summary_text);
    dgcap::write_file_atomic(manifest_path, manifest);
    if (options.json_output)
        std::cout << summary_text;
    else
        std::cout << "wrote " << out << " (centre deflection "
                  << dgcap::format_number(dgcap::units::to_um(centre)) << " um)\n";
    return 0;
}

int cmd_profile(const GlobalOptions& options) {
    if (options.out_path.empty()) throw dgcap::SchemaError("profile requires --out <path>");
    const LoadedDesign loaded = load(options);
    if (!loaded.bundle.profile_given)
        throw dgcap::SchemaError("profile command requires a 'profile' section in the design");

    const dgcap::HeightProfile surface = dgcap::tri_layer_process(loaded.bundle.profile);
    const int maxima = dgcap::count_local_maxima(surface);

    const std::string out = resolve_out(options.out_path);
    const std::string manifest_path = sibling_path(out, ".manifest.json");
    const std::string digest_source = loaded.input_bytes + "|profile";
    const std::string csv = dgcap::height_profile_csv(surface);
    const std::string manifest = manifest_text("profile", digest_source, {out, manifest_path},
                                               {{"maxima_count", maxima}});

    dgcap::write_file_atomic(out, csv);
    dgcap::write_file_atomic(manifest_path, manifest);
    if (options.json_output)
        std::cout << manifest;
    else
        std::cout << "wrote " << out << " (" << maxima << " local maxima)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-gap MEMS tunable-capacitor design toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions options;
    app.add_option("--design", options.design_path, "design file (JSON)");
    app.add_option("--preset", options.preset, "built-in design preset (paper-device)");
    app.add_option("--out", options.out_path, "output file path");
    app.add_flag("--json", options.json_output, "machine-readable stdout");

    auto* report = app.add_subcommand("report", "design figures of merit as JSON");

    double vmax = 12.0;
    std::size_t points = 0; // 0 = take the design file's cv_points
    auto* cv = app.add_subcommand("cv-sweep", "trace the C-V curve to CSV");
    cv->add_option("--vmax", vmax, "sweep end voltage [V]");
    cv->add_option("--points", points, "grid point count (default from the design)");

    std::size_t elements = 0;
    auto* release = app.add_subcommand("release", "post-release membrane profile and gaps");
    release->add_option("--elements", elements, "finite element count (even, >= 8)");

    auto* profile = app.add_subcommand("profile", "sacrificial-layer surface to CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return cmd_report(options);
        if (cv->parsed()) return cmd_cv_sweep(options, vmax, points);
        if (release->parsed()) return cmd_release(options, elements);
        if (profile->parsed()) return cmd_profile(options);
        return 2;
    } catch (const dgcap::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const dgcap::PhysicsError& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return 3;
    } catch (const dgcap::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
