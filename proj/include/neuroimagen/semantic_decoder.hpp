#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/clients.hpp"
#include "neuroimagen/eeg_encoder.hpp"

namespace neuroimagen {

enum class CaptionSource { Label, Annotator };

std::string to_string(CaptionSource s);       // "label" / "annotator"
CaptionSource caption_source_from_string(const std::string& s);  // also accepts "blip"

struct CaptionRecord {
    std::string image_id;
    CaptionSource source = CaptionSource::Label;
    std::string text;
    bool operator==(const CaptionRecord&) const = default;
};

// Lower-cased class name with underscores turned into spaces.
std::string normalize_class_name(const std::string& class_name);
CaptionRecord label_caption(const std::string& class_name, const std::string& image_id = {});

// JSON-lines cache of {image_id, source, text}, kept sorted by (image_id, source).
class CaptionCache {
public:
    explicit CaptionCache(std::filesystem::path path);
    std::optional<CaptionRecord> find(const std::string& image_id, CaptionSource source) const;
    void insert(const CaptionRecord& record);
    void flush() const;  // atomic rewrite
    std::size_t size() const { return records_.size(); }

private:
    std::filesystem::path path_;
    std::map<std::pair<std::string, int>, CaptionRecord> records_;
};

// One caption per image from the external captioner, cached by image id. Images that fail
// are collected and reported together; there is no fallback to label captions.
std::vector<CaptionRecord> annotate_captions(std::span<const StimulusImage> images, CaptionClient& client,
                                             const std::filesystem::path& cache_path, int max_in_flight = 1);

// Target embedding of a caption; cached as float32 under cache_dir keyed by
// sha256(version, text). Values are float32-representable whether or not the cache is hit.
SemanticEmbedding embed_caption(const std::string& caption, TextEmbedder& embedder,
                                const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

enum class Reduction { Mean, Sum };

// ||pred - target||^2 with mean (default) or sum reduction.
double clip_alignment_loss(const SemanticEmbedding& pred, const SemanticEmbedding& target,
                           Reduction reduction = Reduction::Mean);
Mat clip_alignment_grad(const SemanticEmbedding& pred, const SemanticEmbedding& target,
                        Reduction reduction = Reduction::Mean);

struct SemanticConfig {
    int rows = 77;   // L
    int cols = 768;  // D_s
    double learning_rate = 1e-3;
    int epochs = 30;
    int batch_size = 16;
    std::uint64_t seed = 0;
    Reduction reduction = Reduction::Mean;
    TrunkConfig trunk;
};

nlohmann::json to_json(const SemanticConfig& c);
SemanticConfig semantic_config_from_json(const nlohmann::json& j);

// EEG trunk followed by a linear head producing L * D_s values, reshaped row-major.
class SemanticDecoderState {
public:
    SemanticDecoderState() = default;
    explicit SemanticDecoderState(const SemanticConfig& config);

    const SemanticConfig& config() const { return config_; }
    Mat forward(std::span<const EegSegment* const> batch, bool keep_trace);  // (L*D_s) x B
    void backward(const Mat& grad);
    void parameters(nn::ParameterRefs& out);

    void save(const std::filesystem::path& path) const;
    static SemanticDecoderState load(const std::filesystem::path& path);
    bool operator==(const SemanticDecoderState& other) const;

private:
    SemanticConfig config_;
    RecurrentTrunk trunk_;
    nn::Linear head_;
    Mat last_hidden_;
};

SemanticEmbedding predict_embedding(const EegSegment& eeg, SemanticDecoderState& state);

struct SemanticHistory {
    double initial_loss = 0.0;
    std::vector<double> epoch_loss;
};

struct SemanticTrainResult {
    SemanticDecoderState state;
    SemanticHistory history;
};

// `targets` maps image id to its caption embedding; every training segment needs one.
SemanticTrainResult train_semantic_decoder(std::span<const EegSegment> train,
                                           const std::map<std::string, SemanticEmbedding>& targets,
                                           const SemanticConfig& config);
SemanticTrainResult train_semantic_decoder(const DatasetManifest& manifest, const SplitManifest& split,
                                           const std::map<std::string, SemanticEmbedding>& targets,
                                           const SemanticConfig& config, const PreprocessConfig& preprocess);

}  // namespace neuroimagen
