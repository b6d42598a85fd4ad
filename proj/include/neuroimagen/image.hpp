#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "neuroimagen/common.hpp"

namespace neuroimagen {

// Dense H x W x C image, row-major HWC. Pixel values are nominally in [0, 1].
struct Image {
    int height = 0;
    int width = 0;
    int channels = 3;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, int c = 3, double fill = 0.0)
        : height(h), width(w), channels(c), data(static_cast<std::size_t>(h) * w * c, fill) {}

    std::size_t size() const { return data.size(); }
    std::size_t index(int y, int x, int c) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    double& at(int y, int x, int c) { return data[index(y, x, c)]; }
    double at(int y, int x, int c) const { return data[index(y, x, c)]; }

    bool same_shape(const Image& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
    bool operator==(const Image&) const = default;
};

// Bilinear resize with half-pixel centres; output is a convex combination of inputs.
Image resize_bilinear(const Image& src, int height, int width);

Image clamp01(Image img);

// 8-bit RGB PNG. Values are clamped to [0, 1] and rounded on write.
void write_png(const std::filesystem::path& path, const Image& img);
Image read_png(const std::filesystem::path& path);
// Width and height from the IHDR chunk without decoding pixel data.
std::pair<int, int> png_dimensions(const std::filesystem::path& path);

// Tiles equally sized images left to right with a 2 px white gutter.
Image hstack(std::span<const Image> images, int gutter = 2);
Image vstack(std::span<const Image> rows, int gutter = 2);

}  // namespace neuroimagen
