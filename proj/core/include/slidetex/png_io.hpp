#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slidetex/image.hpp"

namespace slidetex {

/// Reads any PNG as 8-bit RGB (palette expanded, 16-bit stripped, alpha
/// dropped, gray promoted). Throws DataError on unreadable input.
RgbImage read_rgb_png(const std::string& path);

/// Reads a PNG as 8-bit grayscale (RGB reduced by BT.601 luma).
std::vector<std::uint8_t> read_gray_png(const std::string& path, int& width, int& height);

void write_rgb_png(const std::string& path, const RgbImage& img);
void write_gray_png(const std::string& path, const std::vector<std::uint8_t>& gray, int width,
                    int height);

/// 8-bit rendering of a scalar image for visualization: min-max rescale to
/// [0, 255]. Feature extraction never goes through this quantization.
std::vector<std::uint8_t> to_gray8(const ScalarImage& img);

void write_mask_png(const std::string& path, const BinaryMask& mask);

}  // namespace slidetex
