#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/dataset_io.hpp"
#include "neuroimagen/image.hpp"
#include "neuroimagen/ssim.hpp"

namespace neuroimagen {

class ClassifierClient {
public:
    virtual ~ClassifierClient() = default;
    virtual std::string kind() const = 0;  // "stub" or "pretrained-imagenet"
    virtual int class_count() const = 0;
    // Probability vector of length class_count().
    virtual Vec probabilities(const Image& image) = 0;
};

// Throws Error unless p has the right length, is non-negative and sums to 1 within 1e-6.
void check_probabilities(const Vec& p, int class_count);

class UniformClassifier : public ClassifierClient {
public:
    explicit UniformClassifier(int classes);
    std::string kind() const override { return "stub"; }
    int class_count() const override { return classes_; }
    Vec probabilities(const Image& image) override;

private:
    int classes_;
};

// Nearest-prototype stub on mean RGB colour: p = softmax(-|mean(x) - proto_k|^2 / temperature).
class PrototypeClassifier : public ClassifierClient {
public:
    PrototypeClassifier(std::vector<std::array<double, 3>> prototypes, double temperature = 0.01);
    std::string kind() const override { return "stub"; }
    int class_count() const override { return static_cast<int>(prototypes_.size()); }
    Vec probabilities(const Image& image) override;
    const std::vector<std::array<double, 3>>& prototypes() const { return prototypes_; }

private:
    std::vector<std::array<double, 3>> prototypes_;
    double temperature_;
};

std::array<double, 3> mean_color(const Image& image);

// Per-class mean colour of the given images; every class in [0, class_count) needs one image.
std::vector<std::array<double, 3>> class_mean_colors(std::span<const StimulusImage> images, int class_count);

// POST {endpoint}/classify {"height", "width", "pixels"} -> {"probabilities": [...]}
class HttpClassifier : public ClassifierClient {
public:
    HttpClassifier(std::string endpoint, int classes, double timeout_s = 60.0);
    std::string kind() const override { return "pretrained-imagenet"; }
    int class_count() const override { return classes_; }
    Vec probabilities(const Image& image) override;

private:
    std::string endpoint_;
    int classes_;
    double timeout_s_;
};

// Ground-truth class is the classifier's top-1 on the ground-truth image. Each trial draws
// N - 1 distractor classes uniformly without replacement (excluding the ground truth) and
// succeeds when the ground truth ranks in the top k of the reconstruction's probabilities
// restricted to those N classes. Ties are broken uniformly at random. Pair i draws from
// derive_seed(seed, pair_keys[i]) when keys are given, else derive_seed(seed, i).
double n_way_top_k_accuracy(std::span<const Image> gt, std::span<const Image> recon, ClassifierClient& classifier,
                            int n_way, int top_k, int trials, std::uint64_t seed,
                            const std::vector<std::string>* pair_keys = nullptr);

// Same, on precomputed probability vectors.
double n_way_top_k_accuracy(std::span<const Vec> gt_probs, std::span<const Vec> recon_probs, int class_count,
                            int n_way, int top_k, int trials, std::uint64_t seed,
                            const std::vector<std::string>* pair_keys = nullptr);

struct InceptionScore {
    double mean = 0.0;
    double std = 0.0;  // population std over splits
};

// Split j covers [floor(j n / s), floor((j + 1) n / s)).
InceptionScore inception_score(std::span<const Vec> probs, int n_splits);
InceptionScore inception_score(std::span<const Image> images, ClassifierClient& classifier, int n_splits);

// Mean SSIM over pairs.
double ssim_metric(std::span<const Image> gt, std::span<const Image> recon, const SsimConfig& config = {});

struct EvalConfig {
    int n_way = 50;
    int top_k = 1;
    int trials = 20;
    int is_splits = 10;
    int n_samples = 3;
    std::uint64_t seed = 0;
};

nlohmann::json to_json(const EvalConfig& c);
EvalConfig eval_config_from_json(const nlohmann::json& j);

struct MetricsRow {
    double acc = 0.0;
    double is_mean = 1.0;
    double is_std = 0.0;
    double ssim = 0.0;
    int n_pairs = 0;
    int n_way = 0;      // effective N
    int is_splits = 0;  // effective split count
};

nlohmann::json to_json(const MetricsRow& r);

struct MetricsReport {
    std::map<std::string, MetricsRow> per_subject;
    MetricsRow aggregate;  // pooled over every (subject, image, sample) pair
    nlohmann::json provenance;

    nlohmann::json to_json() const;
    static MetricsReport from_json(const nlohmann::json& j);
};

// Reconstruction file of sample k for (subject, image).
std::filesystem::path recon_path(const std::filesystem::path& recon_dir, const std::string& subject,
                                 const std::string& image_id, int sample);

// Scores every test-split reconstruction under recon_dir. N is clamped to the classifier's
// class count and the split count to the number of pairs; the effective values are reported.
MetricsReport evaluate_run(const std::filesystem::path& recon_dir, const DatasetManifest& manifest,
                           const SplitManifest& split, ClassifierClient& classifier, const EvalConfig& config,
                           const nlohmann::json& provenance = nlohmann::json::object());

// Published rows as JSON, flagged as not reproducible at desk scale.
nlohmann::json reference_tables_json();

}  // namespace neuroimagen
