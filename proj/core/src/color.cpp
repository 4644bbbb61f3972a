#include "slidetex/color.hpp"

#include <algorithm>
#include <cmath>

namespace slidetex {

ScalarImage to_v_channel(const RgbImage& patch) {
    ScalarImage out(patch.width, patch.height, Channel::V);
    const std::uint8_t* p = patch.pixels.data();
    for (std::size_t i = 0; i < out.values.size(); ++i, p += 3) {
        const double r = p[0], g = p[1], b = p[2];
        const double norm = std::sqrt(r * r + g * g + b * b);
        out.values[i] = norm > 0.0 ? 0.5 * (r + b) / norm : 0.0;
    }
    return out;
}

ScalarImage to_h_channel_raw(const RgbImage& patch) {
    // C3 = arctan(B / max(R, G)), clamped below so B = 0 stays finite.
    // R = 0 covers the max(R, G) = 0 singularity as well: H is 0 there.
    constexpr double kMinC3 = 1e-4;
    ScalarImage out(patch.width, patch.height, Channel::H);
    const std::uint8_t* p = patch.pixels.data();
    for (std::size_t i = 0; i < out.values.size(); ++i, p += 3) {
        const double r = p[0];
        if (r == 0.0) {
            out.values[i] = 0.0;
            continue;
        }
        const double rg = std::max<double>(p[0], p[1]);
        const double c3 = std::max(std::atan(p[2] / rg), kMinC3);
        out.values[i] = r / c3;
    }
    return out;
}

ScalarImage to_h_channel(const RgbImage& patch) {
    ScalarImage out = to_h_channel_raw(patch);
    const auto [lo_it, hi_it] = std::minmax_element(out.values.begin(), out.values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) {
        std::fill(out.values.begin(), out.values.end(), 0.0);
        return out;
    }
    const double scale = 255.0 / (hi - lo);
    for (double& v : out.values) v = (v - lo) * scale;
    return out;
}

ScalarImage to_gray(const RgbImage& patch) {
    ScalarImage out(patch.width, patch.height, Channel::Gray);
    const std::uint8_t* p = patch.pixels.data();
    for (std::size_t i = 0; i < out.values.size(); ++i, p += 3)
        out.values[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
    return out;
}

ScalarImage to_channel(const RgbImage& patch, Channel channel) {
    switch (channel) {
        case Channel::H: return to_h_channel(patch);
        case Channel::V: return to_v_channel(patch);
        case Channel::Gray: return to_gray(patch);
    }
    return to_gray(patch);
}

}  // namespace slidetex
