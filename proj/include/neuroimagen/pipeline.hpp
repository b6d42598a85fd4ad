#pragma once

// Experiment orchestration: configuration, content-hash keyed stage cache, the stage graph,
// the ablation matrix and report rendering.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/diffusion_recon.hpp"
#include "neuroimagen/eval_metrics.hpp"
#include "neuroimagen/saliency_gan.hpp"
#include "neuroimagen/semantic_decoder.hpp"

namespace neuroimagen {

// A stage failed; carries the stage name. CLI exit code 3.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error("stage '" + stage + "' failed: " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

enum class CaptionChoice { None, Label, Blip };

std::string to_string(CaptionChoice c);
CaptionChoice caption_choice_from_string(const std::string& s);

struct AblationFlags {
    bool use_pixel = true;
    CaptionChoice caption_source = CaptionChoice::Label;

    // "I", "L", "B", "B+I", "L+I"
    std::string label() const;
};

struct ExperimentConfig {
    // Either a manifest path or a synthetic dataset spec (generated under output_root).
    std::filesystem::path manifest;
    std::optional<SyntheticSpec> synthetic;
    std::uint64_t synthetic_seed = 0;

    std::filesystem::path output_root = "runs";
    std::uint64_t seed = 0;
    std::vector<double> split_ratios{0.8, 0.1, 0.1};
    PreprocessConfig preprocess;

    TripletConfig encoder;
    GanConfig gan;
    SemanticConfig semantic;
    DiffusionParams diffusion;
    nlohmann::json diffusion_backend = {{"kind", "mock"}};
    nlohmann::json captioner = {{"kind", "mock"}};
    nlohmann::json embedder = {{"kind", "mock"}};
    nlohmann::json classifier = {{"kind", "stub"}};
    EvalConfig metrics;
    AblationFlags ablation;
    int recon_height = 0;  // 0: stimulus resolution
    int recon_width = 0;

    void validate() const;
};

// Stage seeds are derived from the global seed and the stage name. Trunk shapes follow the
// dataset. Environment overrides: NEUROIMAGEN_SEED, NEUROIMAGEN_OUTPUT_ROOT, NEUROIMAGEN_MANIFEST.
// Relative paths resolve against `base_dir`.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& c);

// SHA-256 of the resolved configuration, excluding output location and dataset path.
std::string config_hash(const ExperimentConfig& c);

struct StageNode {
    std::string name;
    std::vector<std::string> deps;
    std::vector<std::string> reads;  // data inputs, e.g. "eeg:train", "image:test"
    bool inference = false;          // runs at inference time
};

// encoder -> {saliency, semantic} -> reconstruct -> evaluate; the ablation flags prune
// the saliency or caption branches.
std::vector<StageNode> build_stage_graph(const AblationFlags& flags);

// Empty when reconstruction and everything upstream of it reads no test-time supervision
// (images or captions of held-out stimuli) and the inference stages read only EEG.
std::vector<std::string> audit_inference_path(const std::vector<StageNode>& graph);

struct StageRun {
    std::string name;
    std::string key;
    bool cached = false;
    double seconds = 0.0;
};

struct RunRecord {
    std::string config_hash;
    std::string ablation;  // flags label
    std::vector<StageRun> stages;
    nlohmann::json artifacts;  // stage name -> directory relative to output_root
    std::filesystem::path report_path;
    MetricsReport report;
    std::filesystem::path record_path;  // where this record was written

    nlohmann::json to_json() const;
};

RunRecord run_pipeline(const ExperimentConfig& config);

// Rows I, L, B, B+I, L+I over the same base configuration; upstream stages are shared
// through the cache.
std::vector<RunRecord> run_ablation_matrix(const ExperimentConfig& base);

struct RenderedReport {
    std::string text;
    nlohmann::json json;
};

// Deterministic text tables (overall, per subject and, for several ablation rows, the
// ablation table) plus JSON; with `out_dir`, also writes report.txt, report.json and one
// ground truth | saliency | samples grid per test image of the first record.
RenderedReport render_report(const std::vector<RunRecord>& records,
                             const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                             const std::optional<ExperimentConfig>& config = std::nullopt);

RunRecord load_run_record(const std::filesystem::path& path);

}  // namespace neuroimagen
