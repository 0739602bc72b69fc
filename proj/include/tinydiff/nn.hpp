#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tinydiff {

// Planar feature map: channels x height x width, contiguous per channel.
struct FeatureMap {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;

    FeatureMap() = default;
    FeatureMap(int c, int h, int w) : channels(c), height(h), width(w), data(static_cast<size_t>(c) * h * w, 0.0) {}

    double* plane(int c) { return data.data() + static_cast<size_t>(c) * height * width; }
    const double* plane(int c) const { return data.data() + static_cast<size_t>(c) * height * width; }
    size_t size() const { return data.size(); }
    void zero() { std::fill(data.begin(), data.end(), 0.0); }
};

// All layer kernels below are deterministic: plain loops, fixed accumulation
// order. Backward passes write input gradients and accumulate (+=) parameter
// gradients so a batch can be reduced sample by sample.

// 3x3 convolution, stride 1, zero padding 1 (same spatial size).
// w layout: [c_out][c_in][3][3], b layout: [c_out].
void conv3x3_forward(const FeatureMap& in, std::span<const double> w, std::span<const double> b, FeatureMap& out);
void conv3x3_backward(const FeatureMap& in, std::span<const double> w, const FeatureMap& gout,
                      FeatureMap& gin, std::span<double> gw, std::span<double> gb);

// 1x1 convolution (channel mixing), w: [c_out][c_in], b: [c_out].
void conv1x1_forward(const FeatureMap& in, std::span<const double> w, std::span<const double> b, FeatureMap& out);
void conv1x1_backward(const FeatureMap& in, std::span<const double> w, const FeatureMap& gout,
                      FeatureMap& gin, std::span<double> gw, std::span<double> gb);

// 2x2 average pooling (halves H and W).
void avgpool2_forward(const FeatureMap& in, FeatureMap& out);
void avgpool2_backward(const FeatureMap& gout, FeatureMap& gin);

// Nearest-neighbour 2x upsampling.
void upsample2_forward(const FeatureMap& in, FeatureMap& out);
void upsample2_backward(const FeatureMap& gout, FeatureMap& gin);

// SiLU x*sigmoid(x), elementwise; backward needs the pre-activation input.
void silu_forward(const FeatureMap& in, FeatureMap& out);
void silu_backward(const FeatureMap& in, const FeatureMap& gout, FeatureMap& gin);

// Dense layer y = W x + b, W: [n_out][n_in].
void linear_forward(std::span<const double> x, std::span<const double> w, std::span<const double> b,
                    std::span<double> y);
void linear_backward(std::span<const double> x, std::span<const double> w, std::span<const double> gy,
                     std::span<double> gx, std::span<double> gw, std::span<double> gb);

// Per-channel feature modulation h * (1 + s) + t, s/t one value per channel.
void film_forward(const FeatureMap& in, std::span<const double> scale, std::span<const double> shift,
                  FeatureMap& out);
void film_backward(const FeatureMap& in, std::span<const double> scale, const FeatureMap& gout,
                   FeatureMap& gin, std::span<double> gscale, std::span<double> gshift);

}  // namespace tinydiff
