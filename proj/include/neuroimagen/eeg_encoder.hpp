#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/checkpoint.hpp"
#include "neuroimagen/dataset_io.hpp"
#include "neuroimagen/nn.hpp"

namespace neuroimagen {

struct TrunkConfig {
    int channels = 128;
    int samples = 440;
    int time_pool = 4;  // non-overlapping average pooling before the recurrence
    int hidden = 32;
    int layers = 1;

    int steps() const { return samples / time_pool; }
};

// Stacked GRU over (pooled) time; the final hidden state of the top layer is the output.
class RecurrentTrunk {
public:
    RecurrentTrunk() = default;
    RecurrentTrunk(const TrunkConfig& config, std::mt19937_64& rng, const std::string& name = "trunk");

    const TrunkConfig& config() const { return config_; }
    int output_size() const { return config_.hidden; }

    // Throws ShapeError on a (C, T) mismatch and Error on non-finite input.
    void check_input(const EegSegment& eeg) const;
    // (hidden x batch). With `keep_trace`, the activations are stored for backward().
    Mat forward(std::span<const EegSegment* const> batch, bool keep_trace);
    void backward(const Mat& grad_out);
    void parameters(nn::ParameterRefs& out);

private:
    TrunkConfig config_;
    std::vector<nn::GruLayer> layers_;
    std::vector<nn::GruLayer::Trace> traces_;
};

struct EegFeature {
    Vec vector;
    std::string source_image_id;
    int class_label = 0;
};

struct TripletConfig {
    double margin = 1.0;  // beta
    int feature_dim = 128;
    int classes_per_batch = 4;
    int samples_per_class = 4;
    double learning_rate = 1e-3;
    double lr_decay = 1.0;  // multiplicative per epoch
    int epochs = 20;
    std::uint64_t seed = 0;
    bool l2_normalize = false;
    bool hardest_negative = false;
    TrunkConfig trunk;
};

nlohmann::json to_json(const TrunkConfig& c);
TrunkConfig trunk_config_from_json(const nlohmann::json& j, TrunkConfig defaults = {});
nlohmann::json to_json(const TripletConfig& c);
TripletConfig triplet_config_from_json(const nlohmann::json& j);

// f_theta: recurrent trunk followed by a linear projection to `feature_dim`.
class EncoderState {
public:
    EncoderState() = default;
    explicit EncoderState(const TripletConfig& config);

    const TripletConfig& config() const { return config_; }
    int feature_dim() const { return config_.feature_dim; }

    // Raw projection (before optional normalisation), feature_dim x batch.
    Mat forward(std::span<const EegSegment* const> batch, bool keep_trace);
    Mat features(std::span<const EegSegment* const> batch, bool keep_trace);
    // dL/d(features) for the last forward with keep_trace; accumulates parameter gradients.
    void backward(const Mat& grad_features);
    void parameters(nn::ParameterRefs& out);

    void save(const std::filesystem::path& path) const;
    static EncoderState load(const std::filesystem::path& path);
    bool operator==(const EncoderState& other) const;

private:
    TripletConfig config_;
    RecurrentTrunk trunk_;
    nn::Linear projection_;
    Mat last_hidden_, last_raw_;
};

// Inference-mode encoding of one segment.
EegFeature encode(const EegSegment& eeg, EncoderState& state);

struct TripletGrad {
    double loss = 0.0;
    Vec d_anchor, d_positive, d_negative;
};

// max(0, margin + |a - p|^2 - |a - n|^2)
double triplet_loss(const Vec& anchor, const Vec& positive, const Vec& negative, double margin);
// Subgradient is zero wherever the hinge is inactive, including the kink itself.
TripletGrad triplet_loss_grad(const Vec& anchor, const Vec& positive, const Vec& negative, double margin);

struct Triplet {
    int anchor = 0;
    int positive = 0;
    int negative = 0;
    bool operator==(const Triplet&) const = default;
};

// All-anchors policy: every sample that has a same-class partner becomes an anchor with one
// random positive and one negative (random, or the nearest when `features` is given and
// hardest_negative is set).
std::vector<Triplet> sample_triplets(std::span<const int> labels, std::uint64_t seed,
                                     bool hardest_negative = false, const Mat* features = nullptr);

struct EncoderHistory {
    double initial_loss = 0.0;       // mean triplet loss before the first update
    std::vector<double> epoch_loss;  // mean triplet loss per epoch
};

struct EncoderTrainResult {
    EncoderState state;
    EncoderHistory history;
};

EncoderTrainResult train_encoder(std::span<const EegSegment> train, const TripletConfig& config);
EncoderTrainResult train_encoder(const DatasetManifest& manifest, const SplitManifest& split,
                                 const TripletConfig& config, const PreprocessConfig& preprocess);

// Fraction of queries whose nearest gallery feature (Euclidean) has the same class.
double nearest_neighbor_accuracy(std::span<const EegFeature> queries, std::span<const EegFeature> gallery);

std::vector<EegSegment> load_segments(const DatasetManifest& manifest, const std::vector<std::string>& image_ids,
                                      const PreprocessConfig& preprocess);

}  // namespace neuroimagen
