#include "slidetex/threshold.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "slidetex/error.hpp"

namespace slidetex {

double otsu_threshold(const ScalarImage& img) {
    if (img.values.empty()) throw DataError("otsu_threshold: empty image");

    const auto [lo_it, hi_it] = std::minmax_element(img.values.begin(), img.values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) return lo;  // degenerate: threshold is the constant itself

    constexpr int kBins = 256;
    std::array<std::uint64_t, kBins> hist{};
    const double bin_scale = kBins / (hi - lo);
    for (double v : img.values) {
        int bin = static_cast<int>((v - lo) * bin_scale);
        hist[std::clamp(bin, 0, kBins - 1)]++;
    }

    std::uint64_t total = img.values.size();
    std::uint64_t weighted_total = 0;
    for (int i = 0; i < kBins; ++i) weighted_total += static_cast<std::uint64_t>(i) * hist[i];

    // Split after bin k: class 0 = bins [0, k], class 1 = bins (k, 255].
    // Integer prefix sums are exact; ties in variance keep the smallest k.
    int best_k = 0;
    double best_variance = -1.0;
    std::uint64_t w0 = 0, s0 = 0;
    for (int k = 0; k < kBins - 1; ++k) {
        w0 += hist[k];
        s0 += static_cast<std::uint64_t>(k) * hist[k];
        const std::uint64_t w1 = total - w0;
        if (w0 == 0 || w1 == 0) continue;
        const double mean0 = static_cast<double>(s0) / static_cast<double>(w0);
        const double mean1 =
            static_cast<double>(weighted_total - s0) / static_cast<double>(w1);
        const double diff = mean0 - mean1;
        const double variance = static_cast<double>(w0) * static_cast<double>(w1) * diff * diff;
        if (variance > best_variance) {
            best_variance = variance;
            best_k = k;
        }
    }

    return lo + (best_k + 1) * (hi - lo) / kBins;
}

BinaryMask threshold(const ScalarImage& img, const ThresholdSpec& spec) {
    if (img.values.empty()) throw DataError("threshold: empty image");
    const double t = spec.method == ThresholdMethod::Otsu ? otsu_threshold(img) : spec.value;

    BinaryMask mask(img.width, img.height);
    if (spec.polarity == Polarity::Above) {
        for (std::size_t i = 0; i < img.values.size(); ++i) mask.bits[i] = img.values[i] > t ? 1 : 0;
    } else {
        for (std::size_t i = 0; i < img.values.size(); ++i) mask.bits[i] = img.values[i] < t ? 1 : 0;
    }
    return mask;
}

std::string threshold_method_name(ThresholdMethod m) {
    return m == ThresholdMethod::Otsu ? "otsu" : "fixed";
}

std::string polarity_name(Polarity p) { return p == Polarity::Above ? "above" : "below"; }

ThresholdMethod threshold_method_from_name(const std::string& name) {
    if (name == "otsu") return ThresholdMethod::Otsu;
    if (name == "fixed") return ThresholdMethod::Fixed;
    throw ConfigError("unknown threshold method: " + name);
}

Polarity polarity_from_name(const std::string& name) {
    if (name == "above") return Polarity::Above;
    if (name == "below") return Polarity::Below;
    throw ConfigError("unknown polarity: " + name);
}

}  // namespace slidetex
