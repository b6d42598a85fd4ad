#pragma once

// Adapters for the external pretrained models: the image captioner and the text embedder.
// Each has a deterministic mock and an HTTP/JSON adapter.

#include <atomic>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "neuroimagen/dataset_io.hpp"

namespace neuroimagen {

struct SemanticEmbedding {
    enum class Kind { Target, Predicted };
    Mat matrix;  // L x D_s
    Kind kind = Kind::Target;

    int rows() const { return static_cast<int>(matrix.rows()); }
    int cols() const { return static_cast<int>(matrix.cols()); }
};

class CaptionClient {
public:
    virtual ~CaptionClient() = default;
    virtual std::string caption(const StimulusImage& image) = 0;
    virtual std::string version() const = 0;
};

class TextEmbedder {
public:
    virtual ~TextEmbedder() = default;
    virtual Mat embed(const std::string& text) = 0;  // rows() x cols()
    virtual int rows() const = 0;
    virtual int cols() const = 0;
    virtual std::string version() const = 0;
};

// Fills "{class}" in the template with the normalised class name.
class MockCaptionClient : public CaptionClient {
public:
    explicit MockCaptionClient(std::string tmpl = "a photo of {class}") : template_(std::move(tmpl)) {}
    std::string caption(const StimulusImage& image) override;
    std::string version() const override { return "mock-captioner:" + template_; }
    int calls() const { return calls_.load(); }

private:
    std::string template_;
    std::atomic<int> calls_{0};
};

// Standard normal matrix seeded by a hash of (version, text).
class MockTextEmbedder : public TextEmbedder {
public:
    MockTextEmbedder(int rows = 77, int cols = 768, std::string version = "mock-embedder-v1");
    Mat embed(const std::string& text) override;
    int rows() const override { return rows_; }
    int cols() const override { return cols_; }
    std::string version() const override { return version_; }
    int calls() const { return calls_.load(); }

private:
    int rows_, cols_;
    std::string version_;
    std::atomic<int> calls_{0};
};

// POST {endpoint}/caption  {"image_id", "height", "width", "pixels": [HWC]} -> {"caption"}
class HttpCaptionClient : public CaptionClient {
public:
    HttpCaptionClient(std::string endpoint, std::string version, double timeout_s = 30.0);
    std::string caption(const StimulusImage& image) override;
    std::string version() const override { return version_; }

private:
    std::string endpoint_, version_;
    double timeout_s_;
};

// POST {endpoint}/embed  {"text"} -> {"rows", "cols", "data": [row-major]}
class HttpTextEmbedder : public TextEmbedder {
public:
    HttpTextEmbedder(std::string endpoint, int rows, int cols, std::string version, double timeout_s = 30.0);
    Mat embed(const std::string& text) override;
    int rows() const override { return rows_; }
    int cols() const override { return cols_; }
    std::string version() const override { return version_; }

private:
    std::string endpoint_;
    int rows_, cols_;
    std::string version_;
    double timeout_s_;
};

// Client construction from a config section, e.g.
//   {"kind": "mock", "template": "a photo of {class}"}
//   {"kind": "http", "endpoint": "http://127.0.0.1:8081", "version": "blip-base"}
// The environment variables NEUROIMAGEN_CAPTIONER / NEUROIMAGEN_CAPTIONER_ENDPOINT and
// NEUROIMAGEN_EMBEDDER / NEUROIMAGEN_EMBEDDER_ENDPOINT override "kind" and "endpoint".
std::unique_ptr<CaptionClient> make_caption_client(const nlohmann::json& config);
std::unique_ptr<TextEmbedder> make_text_embedder(const nlohmann::json& config);

// Splits "http://host:port/base" into the scheme-host-port and the path prefix.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint);

// POSTs a JSON body to endpoint + route and parses the JSON reply; transport failures,
// non-200 statuses and malformed replies throw ClientError.
nlohmann::json http_post_json(const std::string& endpoint, const std::string& route, const nlohmann::json& body,
                              double timeout_s);

}  // namespace neuroimagen
