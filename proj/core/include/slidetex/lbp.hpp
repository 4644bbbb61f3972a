#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slidetex/image.hpp"

namespace slidetex {

enum class LbpVariant { Lbp, Rlbp };

std::string lbp_variant_name(LbpVariant v);
LbpVariant lbp_variant_from_name(const std::string& name);

/// Circular neighborhood descriptor parameters.
struct LbpConfig {
    int neighbors = 16;      // P, >= 4; histogram has 2^P bins
    double radius = 3.0;     // R, >= 1, real-valued radii allowed
    LbpVariant variant = LbpVariant::Rlbp;
    double snap_tol = 1e-6;  // sample coordinates this close to a grid point read it directly

    /// Interior margin: pixels closer than this to a border emit no code.
    int margin() const;
    std::size_t bin_count() const { return std::size_t{1} << neighbors; }

    void validate() const;
    bool same_descriptor(const LbpConfig& other) const;
};

/// Samples the P circular neighbors of (x, y): neighbor p sits at
/// (x + R cos(2 pi p / P), y - R sin(2 pi p / P)). Off-grid positions are
/// read by bilinear interpolation of the four surrounding pixels; positions
/// within snap_tol of a grid point read that pixel directly.
/// (x, y) must be at least margin() away from every border.
std::vector<double> sample_neighbors(const ScalarImage& img, int x, int y, const LbpConfig& cfg);

/// Plain LBP code: sum over p of s(g_p - g_c) 2^p, s = 1 iff g_p >= g_c.
std::uint32_t lbp_code(std::span<const double> samples, double center);

/// Rotation-invariant code: the weights are circularly shifted so that the
/// dominant direction D = argmax_p |g_p - g_c| (ties: smallest p) carries
/// weight 2^0. A circular shift of the samples leaves the code unchanged.
std::uint32_t rlbp_code(std::span<const double> samples, double center);

/// Dense 2^P-bin count vector over one channel of one patch.
struct PatternHistogram {
    std::vector<std::uint32_t> counts;
    Channel tag = Channel::Gray;
    LbpConfig config;

    std::uint64_t total() const;
};

/// One code per interior pixel, accumulated into a dense histogram.
/// Total count equals (W - 2 margin) * (H - 2 margin). Images too small to
/// have an interior are an error.
PatternHistogram extract_histogram(const ScalarImage& img, const LbpConfig& cfg);

}  // namespace slidetex
