#pragma once

#include "neuroimagen/image.hpp"

namespace neuroimagen {

struct SsimConfig {
    double c1 = 0.01 * 0.01;
    double c2 = 0.03 * 0.03;
    int window = 7;  // uniform window side, valid positions only
};

// Mean SSIM over every valid window position and channel. Local statistics use
// population moments over the window.
double ssim(const Image& a, const Image& b, const SsimConfig& config = {});

// SSIM together with its gradient with respect to `b`.
double ssim_with_grad(const Image& a, const Image& b, Image* grad_b, const SsimConfig& config = {});

inline double ssim_loss(const Image& target, const Image& generated, const SsimConfig& config = {}) {
    return 1.0 - ssim(target, generated, config);
}

}  // namespace neuroimagen
