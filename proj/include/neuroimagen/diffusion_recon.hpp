#pragma once

// Image reconstruction from a saliency map and a predicted semantic embedding through a
// latent-diffusion style backend: encode -> forward noise -> conditioned denoise -> decode.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroimagen/clients.hpp"
#include "neuroimagen/image.hpp"
#include "neuroimagen/saliency_gan.hpp"

namespace neuroimagen {

struct DiffusionParams {
    double strength = 0.75;  // fraction of the noise schedule applied to the saliency latent
    int steps = 50;
    double guidance_scale = 7.5;
    std::uint64_t seed = 0;

    void validate() const;
};

nlohmann::json to_json(const DiffusionParams& p);
DiffusionParams diffusion_params_from_json(const nlohmann::json& j);

struct ReconstructedImage {
    Image pixels;
    std::string image_id;
    int sample_index = 0;
};

struct DiffusionBackendDescriptor {
    std::string kind;  // "mock" or "pretrained-latent-diffusion"
    int latent_height = 0, latent_width = 0, latent_channels = 0;
    int cond_rows = 0, cond_cols = 0;
    std::string version;
};

nlohmann::json to_json(const DiffusionBackendDescriptor& d);

struct Latent {
    int height = 0, width = 0, channels = 0;
    std::vector<double> data;
};

class DiffusionBackend {
public:
    virtual ~DiffusionBackend() = default;
    virtual DiffusionBackendDescriptor describe() const = 0;
    virtual Latent encode(const Image& image) = 0;
    virtual Latent noise(const Latent& latent, double strength, std::uint64_t seed) = 0;
    // `embedding` absent means unconditional denoising.
    virtual Latent denoise(const Latent& latent, const SemanticEmbedding* embedding, double strength, int steps,
                           double guidance, std::uint64_t seed) = 0;
    virtual Image decode(const Latent& latent) = 0;

    // ShapeError unless the embedding matches the conditioning contract.
    void check_conditioning(const SemanticEmbedding& embedding) const;
};

struct PaletteEntry {
    std::string name;
    double color[3] = {0.5, 0.5, 0.5};
    std::vector<Mat> keys;  // embeddings that select this colour
};

// Reference backend. Encode/decode are the identity (decode clamps to [0, 1]); noising adds
// Gaussian noise of std s(1 - s) * noise_amplitude; denoising returns
// (1 - s) * latent + s * canvas. The canvas is a colour drawn from the palette with
// probabilities softmax(guidance * cos(embedding, key) / temperature), plus a zero-mean
// plane-wave texture whose layout depends only on the seed. Without an embedding the draw is
// uniform. Without a palette the colour is a fixed projection of the embedding (grey when
// unconditioned).
class MockDiffusionBackend : public DiffusionBackend {
public:
    MockDiffusionBackend(int cond_rows = 77, int cond_cols = 768, std::string version = "mock-ldm-v1");

    DiffusionBackendDescriptor describe() const override;
    Latent encode(const Image& image) override;
    Latent noise(const Latent& latent, double strength, std::uint64_t seed) override;
    Latent denoise(const Latent& latent, const SemanticEmbedding* embedding, double strength, int steps,
                   double guidance, std::uint64_t seed) override;
    Image decode(const Latent& latent) override;

    // Base colour and full canvas the denoiser blends toward for this embedding and seed.
    std::array<double, 3> canvas_color(const SemanticEmbedding* embedding, double guidance, std::uint64_t seed) const;
    Image canvas(const SemanticEmbedding* embedding, double guidance, std::uint64_t seed, int height,
                 int width) const;

    void set_palette(std::vector<PaletteEntry> palette) { palette_ = std::move(palette); }
    const std::vector<PaletteEntry>& palette() const { return palette_; }

    double noise_amplitude = 0.2;
    double temperature = 0.05;
    double texture_amplitude = 0.1;  // std of the canvas texture before clamping; 0 gives a flat canvas

private:
    int cond_rows_, cond_cols_;
    std::string version_;
    std::vector<PaletteEntry> palette_;
};

// Adapter for an external latent diffusion service. Routes (all POST, JSON):
//   /encode  {height, width, pixels}                         -> latent
//   /noise   {latent, strength, seed}                        -> latent
//   /denoise {latent, embedding|null, strength, steps, guidance, seed} -> latent
//   /decode  {latent}                                        -> {height, width, pixels}
// where latent = {height, width, channels, data}.
class HttpDiffusionBackend : public DiffusionBackend {
public:
    HttpDiffusionBackend(std::string endpoint, std::string version, int cond_rows, int cond_cols,
                         double timeout_s = 300.0);

    DiffusionBackendDescriptor describe() const override;
    Latent encode(const Image& image) override;
    Latent noise(const Latent& latent, double strength, std::uint64_t seed) override;
    Latent denoise(const Latent& latent, const SemanticEmbedding* embedding, double strength, int steps,
                   double guidance, std::uint64_t seed) override;
    Image decode(const Latent& latent) override;

private:
    std::string endpoint_, version_;
    int cond_rows_, cond_cols_;
    double timeout_s_;
    int latent_h_ = 0, latent_w_ = 0, latent_c_ = 0;
};

// Backend from a config section, e.g. {"kind": "mock"} or
// {"kind": "pretrained", "endpoint": "http://127.0.0.1:8090", "version": "sd-1.5"}.
// NEUROIMAGEN_DIFFUSION_BACKEND, NEUROIMAGEN_LDM_ENDPOINT and NEUROIMAGEN_LDM_VERSION override
// kind, endpoint and version.
std::unique_ptr<DiffusionBackend> make_diffusion_backend(const nlohmann::json& config, int cond_rows, int cond_cols);

DiffusionBackendDescriptor describe_backend(const DiffusionBackend& backend);

Image resize_saliency(const SaliencyMap& map, int height, int width);

// n_samples reconstructions; sample i uses seed derive_seed(params.seed, i). Without a map the
// start image is mid grey and strength is forced to 1. Without an embedding the denoiser
// runs unconditionally.
std::vector<ReconstructedImage> reconstruct(const SaliencyMap* map, const SemanticEmbedding* embedding,
                                            DiffusionBackend& backend, const DiffusionParams& params,
                                            int n_samples, int height, int width,
                                            const std::string& image_id = {});

}  // namespace neuroimagen
