#include "tinydiff/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tinydiff {

AlphaSigma alpha_sigma(const NoiseSchedule&, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("alpha_sigma: t must be in [0,1], got " + std::to_string(t));
    if (t == 0.0) return {1.0, 0.0};
    if (t == 1.0) return {0.0, 1.0};
    const double a = 3.14159265358979323846 * 0.5 * t;
    return {std::cos(a), std::sin(a)};
}

Image noise_image(const NoiseSchedule& sched, const Image& x, const Image& eps, double t) {
    require_same_shape(x, eps, "noise_image");
    const AlphaSigma as = alpha_sigma(sched, t);
    Image z(x.height, x.width);
    for (size_t i = 0; i < x.data.size(); ++i) z.data[i] = as.alpha * x.data[i] + as.sigma * eps.data[i];
    return z;
}

double denoising_loss(const Image& eps_hat, const Image& eps, double /*t*/) {
    require_same_shape(eps_hat, eps, "denoising_loss");
    double acc = 0.0;
    for (size_t i = 0; i < eps.data.size(); ++i) {
        const double d = eps_hat.data[i] - eps.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(eps.data.size());
}

StepGrid discretize(const NoiseSchedule&, double t0, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("discretize: n_steps must be >= 1");
    if (!(t0 > 0.0 && t0 <= 1.0)) throw std::invalid_argument("discretize: t0 must be in (0,1]");
    StepGrid grid;
    grid.times.resize(static_cast<size_t>(n_steps) + 1);
    for (int i = 0; i <= n_steps; ++i)
        grid.times[static_cast<size_t>(i)] = t0 * static_cast<double>(n_steps - i) / static_cast<double>(n_steps);
    grid.times.back() = 0.0;
    return grid;
}

}  // namespace tinydiff
