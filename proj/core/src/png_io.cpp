#include "slidetex/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "slidetex/error.hpp"

namespace slidetex {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

// Decodes to packed 8-bit rows with `channels` components per pixel.
std::vector<std::uint8_t> decode(const std::string& path, int target_channels, int& width,
                                 int& height) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) throw DataError("cannot open PNG: " + path);

    PngReader reader;
    if (!reader.png || !reader.info) throw DataError("libpng initialization failed");
    if (setjmp(png_jmpbuf(reader.png))) throw DataError("corrupt or truncated PNG: " + path);

    png_init_io(reader.png, file.get());
    png_read_info(reader.png, reader.info);

    png_set_strip_16(reader.png);
    png_set_packing(reader.png);
    png_set_palette_to_rgb(reader.png);
    png_set_expand_gray_1_2_4_to_8(reader.png);
    if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(reader.png);
    png_set_strip_alpha(reader.png);

    const int color_type = png_get_color_type(reader.png, reader.info);
    if (target_channels == 3) {
        if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_gray_to_rgb(reader.png);
    } else {
        if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_rgb_to_gray_fixed(reader.png, 1, -1, -1);  // default BT.601-ish weights
    }
    png_read_update_info(reader.png, reader.info);

    width = static_cast<int>(png_get_image_width(reader.png, reader.info));
    height = static_cast<int>(png_get_image_height(reader.png, reader.info));
    const std::size_t row_bytes = png_get_rowbytes(reader.png, reader.info);
    if (row_bytes != static_cast<std::size_t>(width) * target_channels)
        throw DataError("unexpected PNG row layout: " + path);

    std::vector<std::uint8_t> data(static_cast<std::size_t>(height) * row_bytes);
    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) rows[static_cast<std::size_t>(y)] = data.data() + static_cast<std::size_t>(y) * row_bytes;
    png_read_image(reader.png, rows.data());
    png_read_end(reader.png, nullptr);
    return data;
}

void encode(const std::string& path, const std::uint8_t* data, int width, int height,
            int channels) {
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) throw DataError("cannot write PNG: " + path);

    PngWriter writer;
    if (!writer.png || !writer.info) throw DataError("libpng initialization failed");
    if (setjmp(png_jmpbuf(writer.png))) throw DataError("PNG encode failed: " + path);

    png_init_io(writer.png, file.get());
    png_set_IHDR(writer.png, writer.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(writer.png, writer.info);

    const std::size_t row_bytes = static_cast<std::size_t>(width) * channels;
    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y)
        rows[static_cast<std::size_t>(y)] = const_cast<png_bytep>(data + static_cast<std::size_t>(y) * row_bytes);
    png_write_image(writer.png, rows.data());
    png_write_end(writer.png, nullptr);
}

}  // namespace

RgbImage read_rgb_png(const std::string& path) {
    int w = 0, h = 0;
    auto data = decode(path, 3, w, h);
    RgbImage img(w, h);
    img.pixels = std::move(data);
    return img;
}

std::vector<std::uint8_t> read_gray_png(const std::string& path, int& width, int& height) {
    return decode(path, 1, width, height);
}

void write_rgb_png(const std::string& path, const RgbImage& img) {
    if (img.pixels.size() != img.pixel_count() * 3) throw DataError("malformed RGB image");
    encode(path, img.pixels.data(), img.width, img.height, 3);
}

void write_gray_png(const std::string& path, const std::vector<std::uint8_t>& gray, int width,
                    int height) {
    if (gray.size() != static_cast<std::size_t>(width) * height)
        throw DataError("malformed gray buffer");
    encode(path, gray.data(), width, height, 1);
}

std::vector<std::uint8_t> to_gray8(const ScalarImage& img) {
    std::vector<std::uint8_t> out(img.values.size());
    const auto [lo_it, hi_it] = std::minmax_element(img.values.begin(), img.values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(std::lround((img.values[i] - lo) * scale));
    return out;
}

void write_mask_png(const std::string& path, const BinaryMask& mask) {
    std::vector<std::uint8_t> gray(mask.bits.size());
    for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = mask.bits[i] ? 255 : 0;
    write_gray_png(path, gray, mask.width, mask.height);
}

}  // namespace slidetex
