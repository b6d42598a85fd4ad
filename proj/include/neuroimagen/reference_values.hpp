#pragma once

// Published full-scale results, carried into reports as comparison targets only. They need
// the six-subject EEG-image recordings, pretrained captioning/text/diffusion weights and GPU
// training, so none of them is reproduced by the synthetic runs.

#include <array>
#include <optional>
#include <string_view>

namespace neuroimagen::reference {

struct Row {
    std::string_view label;
    std::optional<double> acc_percent;
    double inception_score;
    std::optional<double> ssim;
};

inline constexpr std::array<Row, 3> kMainResults{{
    {"Brain2Image", std::nullopt, 5.01, std::nullopt},
    {"NeuroVision", std::nullopt, 5.23, std::nullopt},
    {"NeuroImagen", 85.6, 33.50, 0.249},
}};

inline constexpr std::array<Row, 6> kPerSubject{{
    {"subj 01", 83.84, 32.64, 0.254},
    {"subj 02", 84.26, 32.33, 0.247},
    {"subj 03", 86.66, 32.93, 0.251},
    {"subj 04", 86.48, 32.40, 0.244},
    {"subj 05", 87.62, 32.97, 0.250},
    {"subj 06", 85.25, 31.76, 0.245},
}};

struct AblationRow {
    int id;
    bool blip, label, pixel;
    Row values;
};

inline constexpr std::array<AblationRow, 5> kAblation{{
    {1, false, false, true, {"I", 4.5, 16.31, 0.234}},
    {2, false, true, false, {"L", 85.9, 34.12, 0.180}},
    {3, true, false, false, {"B", 74.1, 29.87, 0.157}},
    {4, true, false, true, {"B+I", 65.3, 25.86, 0.235}},
    {5, false, true, true, {"L+I", 85.6, 33.50, 0.249}},
}};

}  // namespace neuroimagen::reference
