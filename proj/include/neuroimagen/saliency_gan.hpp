#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/augment.hpp"
#include "neuroimagen/eeg_encoder.hpp"
#include "neuroimagen/ssim.hpp"

namespace neuroimagen {

struct SaliencyMap {
    Image pixels;  // H_p x W_p x 3 in [0, 1]
    std::string source_image_id;
};

struct LatentNoise {
    Vec z;
};

LatentNoise sample_latent(int dim, std::uint64_t seed);

enum class Distance { L1, L2 };  // L1: mean |u - v|; L2: root mean square of (u - v)

Distance distance_from_string(const std::string& s);
std::string to_string(Distance d);
double distance(std::span<const double> u, std::span<const double> v, Distance metric);

struct GanLossConfig {
    double alpha_adv = 1.0;   // alpha_1
    double alpha_ms = 1.0;    // alpha_2
    double alpha_ssim = 1.0;  // alpha_3
    SsimConfig ssim;
    double ms_epsilon = 1e-8;
    std::string augment_policy = "color,translation,cutout";
    Distance image_distance = Distance::L1;
    Distance latent_distance = Distance::L1;
};

struct GanConfig {
    int latent_dim = 16;
    int map_height = 64;
    int map_width = 64;
    int generator_hidden = 128;
    int discriminator_hidden = 64;
    double generator_lr = 1e-3;
    double discriminator_lr = 1e-3;
    int epochs = 30;
    int batch_size = 16;
    std::uint64_t seed = 0;
    bool freeze_encoder = true;
    GanLossConfig loss;
};

nlohmann::json to_json(const GanConfig& c);
GanConfig gan_config_from_json(const nlohmann::json& j);

// G(z, f): [z; f] -> Linear -> LeakyReLU -> Linear -> sigmoid, reshaped to H_p x W_p x 3.
class Generator {
public:
    Generator() = default;
    Generator(int latent_dim, int feature_dim, int hidden, int out_size, std::mt19937_64& rng);

    struct Trace {
        Mat input, pre_hidden, hidden, output;
    };

    int latent_dim() const { return latent_dim_; }
    int feature_dim() const { return feature_dim_; }
    int output_size() const { return out_.out_features(); }

    Mat forward(const Mat& features, const Mat& z, Trace* trace) const;  // out_size x B, in (0, 1)
    // Returns dL/d[z; f] ((Z + F) x B).
    Mat backward(const Trace& trace, const Mat& grad_output);
    void parameters(nn::ParameterRefs& out);

private:
    int latent_dim_ = 0, feature_dim_ = 0;
    nn::Linear hidden_, out_;
};

// Projection discriminator: D(x, f) = w . phi(x) + b + (V f) . phi(x), phi = LeakyReLU(W x + c).
class Discriminator {
public:
    Discriminator() = default;
    Discriminator(int input_size, int feature_dim, int hidden, std::mt19937_64& rng);

    struct Trace {
        Mat input, features, pre_hidden, hidden, projected;
    };

    Mat forward(const Mat& images, const Mat& features, Trace* trace) const;  // 1 x B
    // Returns dL/d(images); dL/d(features) is written to `grad_features` when given.
    Mat backward(const Trace& trace, const Mat& grad_scores, Mat* grad_features = nullptr);
    void parameters(nn::ParameterRefs& out);

private:
    nn::Linear hidden_, score_, embed_;
};

class GanState {
public:
    GanState() = default;
    GanState(const GanConfig& config, int feature_dim);

    const GanConfig& config() const { return config_; }
    int feature_dim() const { return feature_dim_; }
    int map_size() const { return config_.map_height * config_.map_width * 3; }

    Generator generator;
    Discriminator discriminator;

    void save(const std::filesystem::path& path) const;
    static GanState load(const std::filesystem::path& path);
    bool operator==(const GanState& other) const;

private:
    GanConfig config_;
    int feature_dim_ = 0;
};

Image map_from_column(const Mat& column_block, Eigen::Index col, int height, int width);
Mat column_from_image(const Image& img);

// M_p(x) = G(z, f_theta(x)).
SaliencyMap generate_saliency(const EegFeature& feature, const LatentNoise& z, GanState& state);

// Hinge losses from raw discriminator scores.
double hinge_discriminator_loss(double real_score, double fake_score);
double hinge_generator_loss(double fake_score);

struct HingeGrad {
    double loss = 0.0;
    double d_real = 0.0;  // zero where the margin is met, including the kink
    double d_fake = 0.0;
};
HingeGrad hinge_discriminator_loss_grad(double real_score, double fake_score);

// max(0, 1 - D(A(y), f)) + max(0, 1 + D(A(M_p), f)); y is resized to the map resolution
// and both branches use the augmentation plan drawn from (policy, seed).
double discriminator_loss(const StimulusImage& real, const SaliencyMap& fake, const EegFeature& feature,
                          GanState& state, const std::string& policy, std::uint64_t seed);
// -D(A(M_p), f)
double generator_adv_loss(const SaliencyMap& fake, const EegFeature& feature, GanState& state,
                          const std::string& policy, std::uint64_t seed);

// -(d_x(out1, out2) / (d_z(z1, z2) + eps))
double mode_seeking_loss(const Image& out1, const Image& out2, const LatentNoise& z1, const LatentNoise& z2,
                         Distance dx, Distance dz, double eps);
double mode_seeking_from_distances(double dx, double dz, double eps);

struct ModeSeekingGrad {
    double loss = 0.0;
    std::vector<double> d_out1, d_out2;
};
ModeSeekingGrad mode_seeking_loss_grad(std::span<const double> out1, std::span<const double> out2,
                                       std::span<const double> z1, std::span<const double> z2, Distance dx,
                                       Distance dz, double eps);

// alpha_1 * adv + alpha_2 * ms + alpha_3 * ssim_loss; negative weights are rejected.
double generator_total_loss(double adv, double ms, double ssim_loss, double alpha1, double alpha2, double alpha3);

struct GanEpochStats {
    double d_loss = 0.0;
    double g_adv = 0.0;
    double mode_seeking = 0.0;
    double ssim_loss = 0.0;
    double g_total = 0.0;
    double eval_ssim = 0.0;  // mean SSIM(G output, target) on the evaluation set
};

struct GanHistory {
    double initial_eval_ssim = 0.0;
    std::vector<GanEpochStats> epochs;
};

struct GanTrainResult {
    GanState state;
    EncoderState encoder;  // updated only when freeze_encoder is false
    GanHistory history;
};

struct GanSample {
    EegSegment eeg;
    Image target;  // stimulus resized to the map resolution
};

std::vector<GanSample> make_gan_samples(const DatasetManifest& manifest, const std::vector<std::string>& ids,
                                        const PreprocessConfig& preprocess, int map_height, int map_width);

// Alternating hinge D-step and weighted G-step. `eval` measures SSIM-to-target with fixed
// latents after every epoch (and once before training).
GanTrainResult train_saliency_gan(std::span<const GanSample> train, std::span<const GanSample> eval,
                                  const EncoderState& encoder, const GanConfig& config);
GanTrainResult train_saliency_gan(const DatasetManifest& manifest, const SplitManifest& split,
                                  const EncoderState& encoder, const GanConfig& config,
                                  const PreprocessConfig& preprocess);

// Mean SSIM between G(z_i, f_i) and the targets, with z_i drawn from `seed`.
double evaluate_saliency_ssim(std::span<const GanSample> samples, EncoderState& encoder, GanState& gan,
                              std::uint64_t seed);

}  // namespace neuroimagen
