#include "slidetex/morphology.hpp"

#include <algorithm>

#include "slidetex/error.hpp"

namespace slidetex {

std::vector<std::pair<int, int>> StructuringElement::offsets() const {
    if (radius < 1) throw ConfigError("structuring element radius must be >= 1");
    std::vector<std::pair<int, int>> out;
    const int r2 = radius * radius;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
            if (shape == SeShape::Disk && dx * dx + dy * dy > r2) continue;
            out.emplace_back(dx, dy);
        }
    return out;
}

namespace {

// Flat erosion/dilation with the footprint clipped to image bounds.
template <typename T, typename Reduce>
std::vector<T> filter(const std::vector<T>& src, int width, int height,
                      const std::vector<std::pair<int, int>>& offsets, Reduce reduce) {
    std::vector<T> dst(src.size());
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            bool first = true;
            T acc{};
            for (const auto& [dx, dy] : offsets) {
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
                const T v = src[static_cast<std::size_t>(ny) * width + nx];
                acc = first ? v : reduce(acc, v);
                first = false;
            }
            dst[static_cast<std::size_t>(y) * width + x] = acc;
        }
    }
    return dst;
}

template <typename Image, typename T>
Image run(const Image& img, std::vector<T> Image::* field, MorphOp op,
          const StructuringElement& se) {
    const auto offsets = se.offsets();
    auto erode = [&](const std::vector<T>& v) {
        return filter(v, img.width, img.height, offsets, [](T a, T b) { return std::min(a, b); });
    };
    auto dilate = [&](const std::vector<T>& v) {
        return filter(v, img.width, img.height, offsets, [](T a, T b) { return std::max(a, b); });
    };

    Image out = img;
    switch (op) {
        case MorphOp::Erode: out.*field = erode(img.*field); break;
        case MorphOp::Dilate: out.*field = dilate(img.*field); break;
        case MorphOp::Open: out.*field = dilate(erode(img.*field)); break;
        case MorphOp::Close: out.*field = erode(dilate(img.*field)); break;
    }
    return out;
}

}  // namespace

ScalarImage morph(const ScalarImage& img, MorphOp op, const StructuringElement& se) {
    if (img.values.empty()) throw DataError("morph: empty image");
    return run(img, &ScalarImage::values, op, se);
}

BinaryMask morph(const BinaryMask& mask, MorphOp op, const StructuringElement& se) {
    if (mask.bits.empty()) throw DataError("morph: empty mask");
    return run(mask, &BinaryMask::bits, op, se);
}

}  // namespace slidetex
