#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slidetex {

/// Scalar channel identity. H and V come from the stain-separating color
/// transforms; Gray is plain BT.601 luma.
enum class Channel { H, V, Gray };

std::string channel_name(Channel c);
Channel channel_from_name(const std::string& name);

/// 8-bit RGB raster, row-major, interleaved. Used both for 600x600 patches
/// and for whole slide rasters.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

    RgbImage() = default;
    RgbImage(int w, int h);
    RgbImage(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        auto* p = at(x, y);
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }
};

/// Per-pixel real scalar image. V values lie in [0, sqrt(2)/2]; H and Gray
/// lie in [0, 255] (H after the per-patch rescale).
struct ScalarImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;
    Channel tag = Channel::Gray;

    ScalarImage() = default;
    ScalarImage(int w, int h, Channel c);

    double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// Per-pixel boolean mask stored as 0/1 bytes.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool value = false);

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool value) {
        bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
    }

    std::uint64_t count() const;
    bool operator==(const BinaryMask&) const = default;
};

RgbImage crop(const RgbImage& img, int x, int y, int w, int h);

/// Rotate by `quarter_turns` * 90 degrees clockwise. Exact pixel permutation.
RgbImage rotate90(const RgbImage& img, int quarter_turns);
ScalarImage rotate90(const ScalarImage& img, int quarter_turns);

}  // namespace slidetex
