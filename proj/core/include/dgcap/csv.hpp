#pragma once

#include <cstdint>
#include <string>

#include "dgcap/beam_fem.hpp"
#include "dgcap/device.hpp"
#include "dgcap/profile.hpp"

namespace dgcap {

// Fixed numeric formatting for every exported value: 9 significant digits,
// lowercase exponent, '.' decimal separator. Identical inputs therefore
// produce byte-identical files.
std::string format_number(double value);

// Writes via a temporary file and rename so failures never leave partial output.
void write_file_atomic(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest, hex encoded; changes iff any input byte changes.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

// ISO-8601 UTC timestamp for run manifests.
std::string utc_timestamp();

// CSV renderers. Columns are part of the file-format contract.
std::string cv_curve_csv(const CVCurve& curve);                        // voltage_V,displacement_um,capacitance_pF,stable,dimple_contact
std::string height_profile_csv(const HeightProfile& profile);          // x_um,h_um
std::string release_csv(const HeightProfile& gap, const BeamMesh& mesh,
                        const DeflectionField& field);                 // position_um,deflection_um,gap_um

// Parses a two-column (x_um,h_um) CSV back into a profile.
HeightProfile read_height_profile_csv(const std::string& content);

}  // namespace dgcap
