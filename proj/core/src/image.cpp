#include "slidetex/image.hpp"

#include <algorithm>

#include "slidetex/error.hpp"

namespace slidetex {

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::H: return "H";
        case Channel::V: return "V";
        case Channel::Gray: return "gray";
    }
    return "?";
}

Channel channel_from_name(const std::string& name) {
    if (name == "H" || name == "h") return Channel::H;
    if (name == "V" || name == "v") return Channel::V;
    if (name == "gray" || name == "GRAY" || name == "Gray") return Channel::Gray;
    throw ConfigError("unknown channel name: " + name);
}

namespace {

void require_dims(int w, int h) {
    if (w <= 0 || h <= 0) throw DataError("image dimensions must be positive");
}

}  // namespace

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
    require_dims(w, h);
    pixels.assign(pixel_count() * 3, 0);
}

RgbImage::RgbImage(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) : width(w), height(h) {
    require_dims(w, h);
    pixels.resize(pixel_count() * 3);
    for (std::size_t i = 0; i < pixels.size(); i += 3) {
        pixels[i] = r;
        pixels[i + 1] = g;
        pixels[i + 2] = b;
    }
}

ScalarImage::ScalarImage(int w, int h, Channel c) : width(w), height(h), tag(c) {
    require_dims(w, h);
    values.assign(static_cast<std::size_t>(w) * h, 0.0);
}

BinaryMask::BinaryMask(int w, int h, bool value) : width(w), height(h) {
    require_dims(w, h);
    bits.assign(static_cast<std::size_t>(w) * h, value ? 1 : 0);
}

std::uint64_t BinaryMask::count() const {
    std::uint64_t n = 0;
    for (auto b : bits) n += b;
    return n;
}

RgbImage crop(const RgbImage& img, int x, int y, int w, int h) {
    if (x < 0 || y < 0 || w <= 0 || h <= 0 || x + w > img.width || y + h > img.height)
        throw DataError("crop rectangle out of bounds");
    RgbImage out(w, h);
    for (int row = 0; row < h; ++row) {
        const auto* src = img.at(x, y + row);
        std::copy(src, src + static_cast<std::size_t>(w) * 3, out.at(0, row));
    }
    return out;
}

RgbImage rotate90(const RgbImage& img, int quarter_turns) {
    int k = ((quarter_turns % 4) + 4) % 4;
    if (k == 0) return img;
    RgbImage src = img;
    for (int t = 0; t < k; ++t) {
        RgbImage dst(src.height, src.width);
        for (int y = 0; y < src.height; ++y)
            for (int x = 0; x < src.width; ++x) {
                const auto* p = src.at(x, y);
                // (x, y) -> (H - 1 - y, x) under a clockwise turn
                dst.set(src.height - 1 - y, x, p[0], p[1], p[2]);
            }
        src = std::move(dst);
    }
    return src;
}

ScalarImage rotate90(const ScalarImage& img, int quarter_turns) {
    int k = ((quarter_turns % 4) + 4) % 4;
    if (k == 0) return img;
    ScalarImage src = img;
    for (int t = 0; t < k; ++t) {
        ScalarImage dst(src.height, src.width, src.tag);
        for (int y = 0; y < src.height; ++y)
            for (int x = 0; x < src.width; ++x) dst.at(src.height - 1 - y, x) = src.at(x, y);
        src = std::move(dst);
    }
    return src;
}

}  // namespace slidetex
