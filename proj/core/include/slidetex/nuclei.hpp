#pragma once

#include <span>
#include <string>
#include <vector>

#include "slidetex/image.hpp"
#include "slidetex/threshold.hpp"

namespace slidetex {

/// Nucleus segmentation parameters. The defaults (radius-2 disks, Otsu,
/// nuclei = high-H class) are recorded in every report so runs stay
/// reproducible; the polarity is configurable because stain conventions
/// can flip which class is "nuclei" in the H channel.
struct NucleiConfig {
    int open_radius = 2;
    int close_radius = 2;
    ThresholdSpec threshold;           // Otsu, Above by default
    double min_ratio = 0.03;           // patches strictly below are rejected

    std::string describe() const;
};

struct CellularityReport {
    std::string patch_id;
    std::uint64_t nucleus_pixels = 0;
    std::uint64_t total_pixels = 0;
    double ratio = 0.0;
    bool accepted = false;
};

/// H channel -> grayscale opening (disk) -> threshold -> binary closing
/// (disk). The output mask has the patch's dimensions.
BinaryMask nucleus_mask(const RgbImage& patch, const NucleiConfig& cfg);

/// Fraction of mask pixels set, in [0, 1].
double cellularity(const BinaryMask& mask);

CellularityReport make_cellularity_report(const std::string& patch_id, const BinaryMask& mask,
                                          double min_ratio);

struct GateResult {
    std::vector<std::size_t> accepted;        // indices into the input, in input order
    std::vector<CellularityReport> reports;   // one per input, in input order
};

/// Accepts patches whose cellularity is >= min_ratio ("less than 3% are
/// rejected", so the boundary is accepted). Evaluation may run in parallel;
/// reports always come back in input order.
GateResult gate_patches(std::span<const RgbImage> patches, std::span<const std::string> ids,
                        const NucleiConfig& cfg, int threads = 1);

/// CSV report: a '#'-prefixed config line, then
/// patch_id,nucleus_pixels,total_pixels,ratio,accepted.
std::string cellularity_csv(std::span<const CellularityReport> reports, const NucleiConfig& cfg);

}  // namespace slidetex
