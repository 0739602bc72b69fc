#pragma once

#include <vector>

#include "tinydiff/image.hpp"

namespace tinydiff {

// Continuous-time variance-preserving noise schedule:
//   alpha(t) = cos(pi*t/2), sigma(t) = sin(pi*t/2)
// so alpha^2 + sigma^2 = 1 exactly, alpha(0)=1, alpha(1)=0.
enum class ScheduleKind { Cosine };

struct NoiseSchedule {
    ScheduleKind kind = ScheduleKind::Cosine;
    // Range used when drawing training times; avoids the degenerate sigma=0 endpoint.
    double t_min = 0.001;
    double t_max = 1.0;
};

struct AlphaSigma {
    double alpha;
    double sigma;
};

// Endpoint values are exact (cos(pi/2) in floating point is not zero).
AlphaSigma alpha_sigma(const NoiseSchedule& sched, double t);

// Forward process: alpha_t * x + sigma_t * eps, elementwise.
Image noise_image(const NoiseSchedule& sched, const Image& x, const Image& eps, double t);

// Simplified denoising objective, unit time weighting:
// mean((eps_hat - eps)^2) over all entries.
double denoising_loss(const Image& eps_hat, const Image& eps, double t);

// Descending sampler time grid: times[i] = t0 * (n - i) / n, i = 0..n.
struct StepGrid {
    std::vector<double> times;
};

StepGrid discretize(const NoiseSchedule& sched, double t0, int n_steps);

}  // namespace tinydiff
