#pragma once

#include <cstddef>
#include <vector>

namespace dgcap {

// Uniformly sampled surface height h(x) over a span: the sacrificial-layer
// top surface, and equally the device's initial gap topology.
struct HeightProfile {
    double x_start = 0.0; // m
    double x_step = 0.0;  // m, > 0
    std::vector<double> heights; // m, >= 0

    std::size_t size() const { return heights.size(); }
    double span() const { return x_step * static_cast<double>(heights.size() - 1); }
    double x_end() const { return x_start + span(); }
    double position(std::size_t i) const { return x_start + x_step * static_cast<double>(i); }

    // Piecewise-linear evaluation; clamps to the end samples outside the span.
    double value_at(double x) const;
};

void validate(const HeightProfile& profile);

// Extracts a window of width `span` centred on the profile's midpoint,
// re-sampled at n uniform points starting at x = 0. Throws SpanMismatch when
// the window does not fit inside the profile.
HeightProfile resample_centered(const HeightProfile& profile, double span, std::size_t n);

// Number of strict interior local maxima (sample > both neighbours). Flat
// plateaus contribute none.
int count_local_maxima(const HeightProfile& profile);

}  // namespace dgcap
