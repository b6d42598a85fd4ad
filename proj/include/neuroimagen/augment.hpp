#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neuroimagen/image.hpp"

namespace neuroimagen {

// Differentiable augmentation: brightness shift, saturation scaling, integer translation
// with zero fill, and square cutout, applied in that order. A plan fixes the random draws so
// the same transform can be applied to real and generated images within one step.
struct AugmentPlan {
    std::optional<double> brightness;  // additive shift in [-0.5, 0.5)
    std::optional<double> saturation;  // factor in [0, 2)
    std::optional<std::array<int, 2>> translation;  // (dy, dx)
    std::optional<std::array<int, 3>> cutout;       // (y0, x0, size)

    bool is_identity() const { return !brightness && !saturation && !translation && !cutout; }
};

// Policy: "identity" (or empty), or a comma list of color, brightness, saturation,
// translation, cutout. "color" means brightness + saturation.
AugmentPlan sample_augment_plan(const std::string& policy, std::uint64_t seed, int height, int width);
void validate_augment_policy(const std::string& policy);

struct AugmentTrace {
    std::vector<unsigned char> brightness_pass;  // 1 where the clamp did not bind
    std::vector<unsigned char> saturation_pass;
};

Image augment_forward(const Image& input, const AugmentPlan& plan, AugmentTrace* trace = nullptr);
Image augment_backward(const AugmentPlan& plan, const AugmentTrace& trace, const Image& grad_out);

Image apply_augmentation(const Image& image, const std::string& policy, std::uint64_t seed);

}  // namespace neuroimagen
