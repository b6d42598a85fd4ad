#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "neuroimagen/common.hpp"
#include "neuroimagen/nn.hpp"

namespace neuroimagen {

// Versioned binary container:
//   "NIMGCKPT" | u32 format version | u64 header length | JSON header | float64 tensor data
// The header holds the model kind, its configuration and the name/shape of every tensor,
// in the order the data follows.
struct Checkpoint {
    static constexpr std::uint32_t kFormatVersion = 1;

    std::string kind;
    nlohmann::json config;
    std::map<std::string, Mat> tensors;

    void put(const nn::ParameterRefs& params);
    // Copies stored tensors into `params`; every name must exist with a matching shape.
    void get(const nn::ParameterRefs& params) const;

    void save(const std::filesystem::path& path) const;
    static Checkpoint load(const std::filesystem::path& path, const std::string& expected_kind);
};

}  // namespace neuroimagen
