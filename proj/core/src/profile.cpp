#include "dgcap/profile.hpp"

#include <algorithm>
#include <cmath>

#include "dgcap/errors.hpp"

namespace dgcap {

double HeightProfile::value_at(double x) const {
    if (heights.empty()) return 0.0;
    if (x <= x_start) return heights.front();
    if (x >= x_end()) return heights.back();
    const double t = (x - x_start) / x_step;
    const auto i = static_cast<std::size_t>(t);
    if (i + 1 >= heights.size()) return heights.back();
    const double frac = t - static_cast<double>(i);
    return heights[i] * (1.0 - frac) + heights[i + 1] * frac;
}

void validate(const HeightProfile& profile) {
    if (profile.heights.size() < 16)
        throw PhysicsError("height profile: at least 16 samples required");
    if (!(profile.x_step > 0.0))
        throw PhysicsError("height profile: sample spacing must be > 0");
    for (double h : profile.heights)
        if (h < 0.0) throw PhysicsError("height profile: negative height sample");
}

HeightProfile resample_centered(const HeightProfile& profile, double span, std::size_t n) {
    validate(profile);
    if (n < 16) throw PhysicsError("resample_centered: at least 16 samples required");
    if (!(span > 0.0)) throw PhysicsError("resample_centered: span must be > 0");
    const double centre = profile.x_start + profile.span() / 2.0;
    const double left = centre - span / 2.0;
    const double tol = profile.x_step; // one sample of slack at each end
    if (left < profile.x_start - tol || left + span > profile.x_end() + tol)
        throw SpanMismatch("resample_centered: requested span exceeds profile span");

    HeightProfile out;
    out.x_start = 0.0;
    out.x_step = span / static_cast<double>(n - 1);
    out.heights.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.heights[i] = profile.value_at(left + out.x_step * static_cast<double>(i));
    return out;
}

int count_local_maxima(const HeightProfile& profile) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < profile.heights.size(); ++i)
        if (profile.heights[i] > profile.heights[i - 1] &&
            profile.heights[i] > profile.heights[i + 1])
            ++count;
    return count;
}

}  // namespace dgcap
