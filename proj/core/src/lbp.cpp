#include "slidetex/lbp.hpp"

#include <cmath>
#include <numbers>

#include "slidetex/error.hpp"

namespace slidetex {

std::string lbp_variant_name(LbpVariant v) { return v == LbpVariant::Lbp ? "lbp" : "rlbp"; }

LbpVariant lbp_variant_from_name(const std::string& name) {
    if (name == "lbp") return LbpVariant::Lbp;
    if (name == "rlbp") return LbpVariant::Rlbp;
    throw ConfigError("unknown LBP variant: " + name);
}

int LbpConfig::margin() const { return static_cast<int>(std::ceil(radius)); }

void LbpConfig::validate() const {
    if (neighbors < 4 || neighbors > 24)
        throw ConfigError("LBP neighbor count must be in [4, 24]");
    if (radius < 1.0) throw ConfigError("LBP radius must be >= 1");
    if (snap_tol < 0.0 || snap_tol >= 0.5) throw ConfigError("snap tolerance must be in [0, 0.5)");
}

bool LbpConfig::same_descriptor(const LbpConfig& other) const {
    return neighbors == other.neighbors && radius == other.radius && variant == other.variant;
}

namespace {

struct NeighborOffset {
    bool snap = false;
    int ix = 0, iy = 0;   // direct-read offset when snapped
    double dx = 0, dy = 0;
};

std::vector<NeighborOffset> neighbor_offsets(const LbpConfig& cfg) {
    std::vector<NeighborOffset> out(static_cast<std::size_t>(cfg.neighbors));
    for (int p = 0; p < cfg.neighbors; ++p) {
        const double angle = 2.0 * std::numbers::pi * p / cfg.neighbors;
        NeighborOffset& o = out[static_cast<std::size_t>(p)];
        o.dx = cfg.radius * std::cos(angle);
        o.dy = -cfg.radius * std::sin(angle);  // y axis points down
        const double rx = std::round(o.dx), ry = std::round(o.dy);
        if (std::abs(o.dx - rx) <= cfg.snap_tol && std::abs(o.dy - ry) <= cfg.snap_tol) {
            o.snap = true;
            o.ix = static_cast<int>(rx);
            o.iy = static_cast<int>(ry);
        }
    }
    return out;
}

inline double sample_at(const ScalarImage& img, int x, int y, const NeighborOffset& o) {
    if (o.snap) return img.at(x + o.ix, y + o.iy);
    const double px = x + o.dx;
    const double py = y + o.dy;
    const int x0 = static_cast<int>(std::floor(px));
    const int y0 = static_cast<int>(std::floor(py));
    const double fx = px - x0;
    const double fy = py - y0;
    const double* row0 = img.values.data() + static_cast<std::size_t>(y0) * img.width + x0;
    const double* row1 = row0 + img.width;
    return (1.0 - fy) * ((1.0 - fx) * row0[0] + fx * row0[1]) +
           fy * ((1.0 - fx) * row1[0] + fx * row1[1]);
}

}  // namespace

std::vector<double> sample_neighbors(const ScalarImage& img, int x, int y, const LbpConfig& cfg) {
    cfg.validate();
    const int m = cfg.margin();
    if (x < m || y < m || x >= img.width - m || y >= img.height - m)
        throw DataError("sample_neighbors: pixel too close to the border");
    const auto offsets = neighbor_offsets(cfg);
    std::vector<double> samples(offsets.size());
    for (std::size_t p = 0; p < offsets.size(); ++p) samples[p] = sample_at(img, x, y, offsets[p]);
    return samples;
}

std::uint32_t lbp_code(std::span<const double> samples, double center) {
    std::uint32_t code = 0;
    for (std::size_t p = 0; p < samples.size(); ++p)
        if (samples[p] >= center) code |= std::uint32_t{1} << p;
    return code;
}

std::uint32_t rlbp_code(std::span<const double> samples, double center) {
    const std::uint32_t n = static_cast<std::uint32_t>(samples.size());
    std::uint32_t dominant = 0;
    double max_abs = -1.0;
    for (std::uint32_t p = 0; p < n; ++p) {
        const double a = std::abs(samples[p] - center);
        if (a > max_abs) {  // strict: ties keep the smallest p
            max_abs = a;
            dominant = p;
        }
    }
    std::uint32_t code = 0;
    for (std::uint32_t p = 0; p < n; ++p)
        if (samples[p] >= center) code |= std::uint32_t{1} << ((p - dominant + n) % n);
    return code;
}

std::uint64_t PatternHistogram::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

PatternHistogram extract_histogram(const ScalarImage& img, const LbpConfig& cfg) {
    cfg.validate();
    const int m = cfg.margin();
    if (img.width <= 2 * m || img.height <= 2 * m)
        throw DataError("extract_histogram: image smaller than 2*ceil(R)+1 in some axis");

    const auto offsets = neighbor_offsets(cfg);
    const int n = cfg.neighbors;
    const bool rotated = cfg.variant == LbpVariant::Rlbp;

    PatternHistogram hist;
    hist.counts.assign(cfg.bin_count(), 0);
    hist.tag = img.tag;
    hist.config = cfg;

    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int y = m; y < img.height - m; ++y) {
        for (int x = m; x < img.width - m; ++x) {
            const double center = img.at(x, y);
            for (int p = 0; p < n; ++p)
                samples[static_cast<std::size_t>(p)] = sample_at(img, x, y, offsets[static_cast<std::size_t>(p)]);
            const std::uint32_t code = rotated ? rlbp_code(samples, center) : lbp_code(samples, center);
            hist.counts[code]++;
        }
    }
    return hist;
}

}  // namespace slidetex
