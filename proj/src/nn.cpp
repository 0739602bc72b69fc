#include "tinydiff/nn.hpp"

#include <cmath>

namespace tinydiff {

// ---------------------------------------------------------------------------
// conv 3x3
// ---------------------------------------------------------------------------

void conv3x3_forward(const FeatureMap& in, std::span<const double> w, std::span<const double> b, FeatureMap& out) {
    const int H = in.height, W = in.width, Ci = in.channels, Co = out.channels;
    for (int co = 0; co < Co; ++co) {
        double* op = out.plane(co);
        const double bias = b[static_cast<size_t>(co)];
        for (int i = 0; i < H * W; ++i) op[i] = bias;
        for (int ci = 0; ci < Ci; ++ci) {
            const double* ip = in.plane(ci);
            const double* k = w.data() + (static_cast<size_t>(co) * Ci + ci) * 9;
            for (int ky = 0; ky < 3; ++ky) {
                for (int kx = 0; kx < 3; ++kx) {
                    const double kv = k[ky * 3 + kx];
                    if (kv == 0.0) continue;
                    const int dy = ky - 1, dx = kx - 1;
                    const int y0 = (dy < 0) ? 1 : 0, y1 = (dy > 0) ? H - 1 : H;
                    const int x0 = (dx < 0) ? 1 : 0, x1 = (dx > 0) ? W - 1 : W;
                    for (int y = y0; y < y1; ++y) {
                        const double* irow = ip + (y + dy) * W + dx;
                        double* orow = op + y * W;
                        for (int x = x0; x < x1; ++x) orow[x] += kv * irow[x];
                    }
                }
            }
        }
    }
}

void conv3x3_backward(const FeatureMap& in, std::span<const double> w, const FeatureMap& gout,
                      FeatureMap& gin, std::span<double> gw, std::span<double> gb) {
    const int H = in.height, W = in.width, Ci = in.channels, Co = gout.channels;
    gin.zero();
    for (int co = 0; co < Co; ++co) {
        const double* gp = gout.plane(co);
        double acc = 0.0;
        for (int i = 0; i < H * W; ++i) acc += gp[i];
        gb[static_cast<size_t>(co)] += acc;
        for (int ci = 0; ci < Ci; ++ci) {
            const double* ip = in.plane(ci);
            double* gip = gin.plane(ci);
            const size_t kbase = (static_cast<size_t>(co) * Ci + ci) * 9;
            for (int ky = 0; ky < 3; ++ky) {
                for (int kx = 0; kx < 3; ++kx) {
                    const int dy = ky - 1, dx = kx - 1;
                    const int y0 = (dy < 0) ? 1 : 0, y1 = (dy > 0) ? H - 1 : H;
                    const int x0 = (dx < 0) ? 1 : 0, x1 = (dx > 0) ? W - 1 : W;
                    double wacc = 0.0;
                    const double kv = w[kbase + ky * 3 + kx];
                    for (int y = y0; y < y1; ++y) {
                        const double* irow = ip + (y + dy) * W + dx;
                        double* girow = gip + (y + dy) * W + dx;
                        const double* grow = gp + y * W;
                        for (int x = x0; x < x1; ++x) {
                            wacc += irow[x] * grow[x];
                            girow[x] += kv * grow[x];
                        }
                    }
                    gw[kbase + ky * 3 + kx] += wacc;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// conv 1x1
// ---------------------------------------------------------------------------

void conv1x1_forward(const FeatureMap& in, std::span<const double> w, std::span<const double> b, FeatureMap& out) {
    const int HW = in.height * in.width, Ci = in.channels, Co = out.channels;
    for (int co = 0; co < Co; ++co) {
        double* op = out.plane(co);
        const double bias = b[static_cast<size_t>(co)];
        for (int i = 0; i < HW; ++i) op[i] = bias;
        for (int ci = 0; ci < Ci; ++ci) {
            const double kv = w[static_cast<size_t>(co) * Ci + ci];
            const double* ip = in.plane(ci);
            for (int i = 0; i < HW; ++i) op[i] += kv * ip[i];
        }
    }
}

void conv1x1_backward(const FeatureMap& in, std::span<const double> w, const FeatureMap& gout,
                      FeatureMap& gin, std::span<double> gw, std::span<double> gb) {
    const int HW = in.height * in.width, Ci = in.channels, Co = gout.channels;
    gin.zero();
    for (int co = 0; co < Co; ++co) {
        const double* gp = gout.plane(co);
        double acc = 0.0;
        for (int i = 0; i < HW; ++i) acc += gp[i];
        gb[static_cast<size_t>(co)] += acc;
        for (int ci = 0; ci < Ci; ++ci) {
            const double* ip = in.plane(ci);
            double* gip = gin.plane(ci);
            const double kv = w[static_cast<size_t>(co) * Ci + ci];
            double wacc = 0.0;
            for (int i = 0; i < HW; ++i) {
                wacc += ip[i] * gp[i];
                gip[i] += kv * gp[i];
            }
            gw[static_cast<size_t>(co) * Ci + ci] += wacc;
        }
    }
}

// ---------------------------------------------------------------------------
// pooling / upsampling
// ---------------------------------------------------------------------------

void avgpool2_forward(const FeatureMap& in, FeatureMap& out) {
    const int Ho = out.height, Wo = out.width;
    for (int c = 0; c < in.channels; ++c) {
        const double* ip = in.plane(c);
        double* op = out.plane(c);
        for (int y = 0; y < Ho; ++y)
            for (int x = 0; x < Wo; ++x) {
                const double* r0 = ip + (2 * y) * in.width + 2 * x;
                const double* r1 = r0 + in.width;
                op[y * Wo + x] = 0.25 * (r0[0] + r0[1] + r1[0] + r1[1]);
            }
    }
}

void avgpool2_backward(const FeatureMap& gout, FeatureMap& gin) {
    const int Ho = gout.height, Wo = gout.width;
    for (int c = 0; c < gout.channels; ++c) {
        const double* gp = gout.plane(c);
        double* gip = gin.plane(c);
        for (int y = 0; y < Ho; ++y)
            for (int x = 0; x < Wo; ++x) {
                const double g = 0.25 * gp[y * Wo + x];
                double* r0 = gip + (2 * y) * gin.width + 2 * x;
                double* r1 = r0 + gin.width;
                r0[0] = g; r0[1] = g; r1[0] = g; r1[1] = g;
            }
    }
}

void upsample2_forward(const FeatureMap& in, FeatureMap& out) {
    const int Hi = in.height, Wi = in.width;
    for (int c = 0; c < in.channels; ++c) {
        const double* ip = in.plane(c);
        double* op = out.plane(c);
        for (int y = 0; y < Hi; ++y)
            for (int x = 0; x < Wi; ++x) {
                const double v = ip[y * Wi + x];
                double* r0 = op + (2 * y) * out.width + 2 * x;
                double* r1 = r0 + out.width;
                r0[0] = v; r0[1] = v; r1[0] = v; r1[1] = v;
            }
    }
}

void upsample2_backward(const FeatureMap& gout, FeatureMap& gin) {
    const int Hi = gin.height, Wi = gin.width;
    for (int c = 0; c < gin.channels; ++c) {
        const double* gp = gout.plane(c);
        double* gip = gin.plane(c);
        for (int y = 0; y < Hi; ++y)
            for (int x = 0; x < Wi; ++x) {
                const double* r0 = gp + (2 * y) * gout.width + 2 * x;
                const double* r1 = r0 + gout.width;
                gip[y * Wi + x] = r0[0] + r0[1] + r1[0] + r1[1];
            }
    }
}

// ---------------------------------------------------------------------------
// activations / modulation / dense
// ---------------------------------------------------------------------------

void silu_forward(const FeatureMap& in, FeatureMap& out) {
    for (size_t i = 0; i < in.data.size(); ++i) {
        const double x = in.data[i];
        out.data[i] = x / (1.0 + std::exp(-x));
    }
}

void silu_backward(const FeatureMap& in, const FeatureMap& gout, FeatureMap& gin) {
    for (size_t i = 0; i < in.data.size(); ++i) {
        const double x = in.data[i];
        const double sig = 1.0 / (1.0 + std::exp(-x));
        gin.data[i] = gout.data[i] * sig * (1.0 + x * (1.0 - sig));
    }
}

void linear_forward(std::span<const double> x, std::span<const double> w, std::span<const double> b,
                    std::span<double> y) {
    const size_t ni = x.size(), no = y.size();
    for (size_t o = 0; o < no; ++o) {
        double acc = b[o];
        const double* wr = w.data() + o * ni;
        for (size_t i = 0; i < ni; ++i) acc += wr[i] * x[i];
        y[o] = acc;
    }
}

void linear_backward(std::span<const double> x, std::span<const double> w, std::span<const double> gy,
                     std::span<double> gx, std::span<double> gw, std::span<double> gb) {
    const size_t ni = x.size(), no = gy.size();
    for (size_t i = 0; i < ni; ++i) gx[i] = 0.0;
    for (size_t o = 0; o < no; ++o) {
        const double g = gy[o];
        gb[o] += g;
        const double* wr = w.data() + o * ni;
        double* gwr = gw.data() + o * ni;
        for (size_t i = 0; i < ni; ++i) {
            gwr[i] += g * x[i];
            gx[i] += wr[i] * g;
        }
    }
}

void film_forward(const FeatureMap& in, std::span<const double> scale, std::span<const double> shift,
                  FeatureMap& out) {
    const int HW = in.height * in.width;
    for (int c = 0; c < in.channels; ++c) {
        const double s = 1.0 + scale[static_cast<size_t>(c)];
        const double t = shift[static_cast<size_t>(c)];
        const double* ip = in.plane(c);
        double* op = out.plane(c);
        for (int i = 0; i < HW; ++i) op[i] = s * ip[i] + t;
    }
}

void film_backward(const FeatureMap& in, std::span<const double> scale, const FeatureMap& gout,
                   FeatureMap& gin, std::span<double> gscale, std::span<double> gshift) {
    const int HW = in.height * in.width;
    for (int c = 0; c < in.channels; ++c) {
        const double s = 1.0 + scale[static_cast<size_t>(c)];
        const double* ip = in.plane(c);
        const double* gp = gout.plane(c);
        double* gip = gin.plane(c);
        double gs = 0.0, gt = 0.0;
        for (int i = 0; i < HW; ++i) {
            gs += gp[i] * ip[i];
            gt += gp[i];
            gip[i] = s * gp[i];
        }
        gscale[static_cast<size_t>(c)] += gs;
        gshift[static_cast<size_t>(c)] += gt;
    }
}

}  // namespace tinydiff
