#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace neuroimagen {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments; the CLI maps it to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class DatasetError : public Error {
public:
    using Error::Error;
};

// Non-finite loss during optimisation.
class TrainingDiverged : public Error {
public:
    using Error::Error;
};

// External model (captioner, embedder, diffusion backend, classifier) failed.
class ClientError : public Error {
public:
    using Error::Error;
};

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// Derives an independent 64-bit seed from a base seed and a label.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Writes via a temporary sibling file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// Raw little-endian float32 tensors, row-major. Values are narrowed on write.
void write_f32(const std::filesystem::path& path, std::span<const double> values);
std::vector<double> read_f32(const std::filesystem::path& path, std::size_t expected_count);

bool all_finite(std::span<const double> values);
inline bool all_finite(const Mat& m) { return m.allFinite(); }

}  // namespace neuroimagen
