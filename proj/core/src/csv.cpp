#include "dgcap/csv.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "dgcap/errors.hpp"
#include "dgcap/units.hpp"

namespace dgcap {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("write to '" + tmp + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot move output into place at '" + path + "'");
    }
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string digest_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string cv_curve_csv(const CVCurve& curve) {
    std::string out = "voltage_V,displacement_um,capacitance_pF,stable,dimple_contact\n";
    for (const auto& p : curve.points) {
        out += format_number(p.voltage);
        out += ',';
        out += format_number(units::to_um(p.displacement));
        out += ',';
        out += format_number(units::to_pF(p.capacitance));
        out += ',';
        out += p.stable ? "true" : "false";
        out += ',';
        out += p.dimple_contact ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string height_profile_csv(const HeightProfile& profile) {
    std::string out = "x_um,h_um\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out += format_number(units::to_um(profile.position(i)));
        out += ',';
        out += format_number(units::to_um(profile.heights[i]));
        out += '\n';
    }
    return out;
}

std::string release_csv(const HeightProfile& gap, const BeamMesh& mesh,
                        const DeflectionField& field) {
    std::string out = "position_um,deflection_um,gap_um\n";
    for (std::size_t i = 0; i < gap.size(); ++i) {
        const double x = gap.position(i) - gap.x_start;
        out += format_number(units::to_um(x));
        out += ',';
        out += format_number(units::to_um(evaluate_deflection(mesh, field, x)));
        out += ',';
        out += format_number(units::to_um(gap.heights[i]));
        out += '\n';
    }
    return out;
}

HeightProfile read_height_profile_csv(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line.rfind("x_um", 0) != 0)
        throw SchemaError("profile CSV: missing 'x_um,h_um' header");

    std::vector<double> xs, hs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw SchemaError("profile CSV line " + std::to_string(line_no) +
                              ": expected two comma-separated columns");
        try {
            xs.push_back(units::from_um(std::stod(line.substr(0, comma))));
            hs.push_back(units::from_um(std::stod(line.substr(comma + 1))));
        } catch (const std::exception&) {
            throw SchemaError("profile CSV line " + std::to_string(line_no) +
                              ": not a number");
        }
    }
    if (xs.size() < 16) throw SchemaError("profile CSV: at least 16 samples required");

    HeightProfile profile;
    profile.x_start = xs.front();
    profile.x_step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(profile.x_step > 0.0)) throw SchemaError("profile CSV: x must increase");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::abs(xs[i] - xs[i - 1] - profile.x_step) > 1e-6 * profile.x_step + 1e-15)
            throw SchemaError("profile CSV: sample spacing must be uniform");
    profile.heights = std::move(hs);
    validate(profile);
    return profile;
}

}  // namespace dgcap
