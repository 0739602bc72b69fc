#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tinydiff/errors.hpp"

namespace tinydiff {

// H x W x 3 image with real pixel values, nominal range [-1, 1].
// Row-major, channel-interleaved.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, double fill = 0.0) : height(h), width(w), data(static_cast<size_t>(h) * w * 3, fill) {}

    double& at(int y, int x, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    double at(int y, int x, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }

    size_t size() const { return data.size(); }
    bool same_shape(const Image& o) const { return height == o.height && width == o.width; }
};

inline void require_same_shape(const Image& a, const Image& b, const char* where) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(where) + ": shape mismatch " + std::to_string(a.height) + "x" +
                         std::to_string(a.width) + " vs " + std::to_string(b.height) + "x" + std::to_string(b.width));
}

// Binary edit-region mask, H x W, 1 = editable.
struct Mask {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> data;

    Mask() = default;
    Mask(int h, int w, uint8_t fill = 1) : height(h), width(w), data(static_cast<size_t>(h) * w, fill) {}

    uint8_t& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int y, int x) const { return data[static_cast<size_t>(y) * width + x]; }
};

double mse(const Image& a, const Image& b);

// Lossless 8-bit RGB container (binary PPM, P6). The pixel mapping is
// [-1,1] <-> [0,255] linear with round-half-away-from-zero.
uint8_t pixel_to_byte(double v);
double byte_to_pixel(uint8_t b);
void write_ppm(const Image& img, const std::string& path);
Image read_ppm(const std::string& path);

// Masks stored as PPM too: any nonzero pixel = editable.
void write_mask_ppm(const Mask& m, const std::string& path);
Mask read_mask_ppm(const std::string& path);

}  // namespace tinydiff
