#pragma once

#include <utility>
#include <vector>

#include "slidetex/image.hpp"

namespace slidetex {

enum class SeShape { Disk, Square };
enum class MorphOp { Erode, Dilate, Open, Close };

/// Flat structuring element, symmetric about its center.
/// Disk rasterization: (dx, dy) included iff dx^2 + dy^2 <= radius^2.
struct StructuringElement {
    SeShape shape = SeShape::Disk;
    int radius = 1;

    static StructuringElement disk(int radius) { return {SeShape::Disk, radius}; }
    static StructuringElement square(int radius) { return {SeShape::Square, radius}; }

    /// Footprint offsets relative to the origin.
    std::vector<std::pair<int, int>> offsets() const;
};

/// Grayscale flat morphology: min over the footprint for erosion, max for
/// dilation. At borders the footprint is clipped to image bounds.
/// Open = dilate(erode(x)), Close = erode(dilate(x)).
ScalarImage morph(const ScalarImage& img, MorphOp op, const StructuringElement& se);

/// Set-theoretic morphology on binary masks, same border policy.
BinaryMask morph(const BinaryMask& mask, MorphOp op, const StructuringElement& se);

}  // namespace slidetex
