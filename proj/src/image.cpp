#include "tinydiff/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace tinydiff {

double mse(const Image& a, const Image& b) {
    require_same_shape(a, b, "mse");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.data.size());
}

uint8_t pixel_to_byte(double v) {
    double scaled = (v + 1.0) * 0.5 * 255.0;
    if (scaled <= 0.0) return 0;
    if (scaled >= 255.0) return 255;
    // round half away from zero (values here are non-negative)
    return static_cast<uint8_t>(std::floor(scaled + 0.5));
}

double byte_to_pixel(uint8_t b) {
    return static_cast<double>(b) / 255.0 * 2.0 - 1.0;
}

void write_ppm(const Image& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("write_ppm: cannot open " + path);
    f << "P6\n" << img.width << " " << img.height << "\n255\n";
    std::vector<uint8_t> row(static_cast<size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < 3; ++c)
                row[static_cast<size_t>(x) * 3 + c] = pixel_to_byte(img.at(y, x, c));
        f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!f) throw IoError("write_ppm: write failed for " + path);
}

namespace {

int read_ppm_token(std::istream& f) {
    // skips whitespace and '#' comments per the PPM grammar
    int ch = f.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = f.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = f.get();
    }
    if (ch == EOF) throw IntegrityError("read_ppm: truncated header");
    int value = 0;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        ch = f.get();
    }
    return value;
}

void read_ppm_raw(const std::string& path, int& h, int& w, std::vector<uint8_t>& bytes) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("read_ppm: cannot open " + path);
    char m0 = 0, m1 = 0;
    f.get(m0);
    f.get(m1);
    if (m0 != 'P' || m1 != '6') throw IntegrityError("read_ppm: not a binary PPM: " + path);
    w = read_ppm_token(f);
    h = read_ppm_token(f);
    const int maxval = read_ppm_token(f);
    if (maxval != 255) throw IntegrityError("read_ppm: expected maxval 255 in " + path);
    bytes.resize(static_cast<size_t>(h) * w * 3);
    f.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (f.gcount() != static_cast<std::streamsize>(bytes.size()))
        throw IntegrityError("read_ppm: truncated pixel data in " + path);
}

}  // namespace

Image read_ppm(const std::string& path) {
    int h = 0, w = 0;
    std::vector<uint8_t> bytes;
    read_ppm_raw(path, h, w, bytes);
    Image img(h, w);
    for (size_t i = 0; i < bytes.size(); ++i) img.data[i] = byte_to_pixel(bytes[i]);
    return img;
}

void write_mask_ppm(const Mask& m, const std::string& path) {
    Image img(m.height, m.width);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x)
            for (int c = 0; c < 3; ++c) img.at(y, x, c) = m.at(y, x) ? 1.0 : -1.0;
    write_ppm(img, path);
}

Mask read_mask_ppm(const std::string& path) {
    int h = 0, w = 0;
    std::vector<uint8_t> bytes;
    read_ppm_raw(path, h, w, bytes);
    Mask m(h, w, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const size_t i = (static_cast<size_t>(y) * w + x) * 3;
            m.at(y, x) = (bytes[i] || bytes[i + 1] || bytes[i + 2]) ? 1 : 0;
        }
    return m;
}

}  // namespace tinydiff
