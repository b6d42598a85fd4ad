#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/common.hpp"
#include "neuroimagen/image.hpp"

namespace neuroimagen {

// One EEG window: channels x samples, paired with the stimulus it was recorded for.
struct EegSegment {
    Mat data;  // C x T
    int subject_id = 0;
    int class_label = 0;
    std::string image_id;

    int channel_count() const { return static_cast<int>(data.rows()); }
    int sample_count() const { return static_cast<int>(data.cols()); }
};

struct StimulusImage {
    Image pixels;  // H x W x 3 in [0, 1]
    std::string image_id;
    int class_label = 0;
    std::string class_name;
};

struct DatasetShapes {
    int channels = 128;  // C
    int samples = 440;   // T
    int height = 64;     // H
    int width = 64;      // W
};

struct DatasetRecord {
    std::filesystem::path eeg_path;    // relative to the manifest directory
    std::filesystem::path image_path;  // .png or raw .f32 (H x W x 3)
    int subject_id = 0;
    int class_label = 0;
    std::string image_id;
};

struct DatasetManifest {
    int version = 1;
    DatasetShapes shapes;
    std::map<int, std::string> class_names;
    std::vector<DatasetRecord> records;
    std::filesystem::path root;  // directory the relative paths resolve against

    std::vector<std::string> image_ids() const;  // sorted, unique
    std::vector<int> subject_ids() const;        // sorted, unique
};

struct SplitManifest {
    std::vector<std::string> train, val, test;  // sorted image ids
    std::uint64_t seed = 0;
    std::vector<double> ratios;

    // Which partition an image id falls in: "train", "val", "test", or "" if absent.
    std::string partition_of(const std::string& image_id) const;
    const std::vector<std::string>& part(const std::string& name) const;
};

DatasetManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

EegSegment load_eeg(const DatasetManifest& manifest, const DatasetRecord& record);
StimulusImage load_image(const DatasetManifest& manifest, const DatasetRecord& record);

// Records whose image id belongs to `ids`, in manifest order.
std::vector<DatasetRecord> records_for(const DatasetManifest& manifest,
                                       const std::vector<std::string>& ids);

// By-image split: each part gets floor(n * ratio), the remainder goes to train.
SplitManifest split_dataset(const DatasetManifest& manifest, const std::vector<double>& ratios,
                            std::uint64_t seed);
void save_split(const SplitManifest& split, const std::filesystem::path& path);
SplitManifest load_split(const std::filesystem::path& path);

struct PreprocessConfig {
    bool zscore = true;
    std::optional<int> crop_samples;  // keep this many samples starting at crop_offset
    int crop_offset = 0;
    // Zero-variance channels become zeros (with a warning) when set, otherwise throw.
    bool zero_variance_to_zero = true;
    double variance_floor = 1e-12;
};

EegSegment preprocess_eeg(const EegSegment& raw, const PreprocessConfig& config);

struct SyntheticSpec {
    int n_classes = 4;
    int images_per_class = 10;
    int subjects = 2;
    int channels = 16;
    int samples = 128;
    int height = 64;
    int width = 64;
    double snr = 2.0;  // signal RMS / noise std; +inf disables noise
};

// Writes a class-conditioned synthetic EEG-image dataset under `out_dir` (manifest.json,
// eeg/*.f32, images/*.png) and returns the loaded manifest.
DatasetManifest generate_synthetic_dataset(const SyntheticSpec& spec, std::uint64_t seed,
                                           const std::filesystem::path& out_dir);

nlohmann::json to_json(const PreprocessConfig& c);
PreprocessConfig preprocess_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SyntheticSpec& s);  // snr = +inf is written as null
SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j);

// Class name pool used by the synthetic generator; beyond the pool names are "class_NN".
std::string synthetic_class_name(int label);

}  // namespace neuroimagen
