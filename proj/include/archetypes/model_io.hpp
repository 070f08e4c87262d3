#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "archetypes/model.hpp"

namespace archetypes {

inline constexpr int kModelSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// model.json: archetypes in both the fitted (scaled) space and original
// units, the coefficient matrices, and the fit diagnostics.
std::string model_to_json(const ArchetypalModel& model);
ArchetypalModel model_from_json(const std::string& text);

void save_model(const ArchetypalModel& model, const std::string& path);
ArchetypalModel load_model(const std::string& path);

// Reproducibility record for a CLI run. created_utc honors SOURCE_DATE_EPOCH
// and otherwise pins the epoch, so identical runs emit identical bytes.
struct RunManifest {
    std::string command;
    std::string input_path;
    std::string input_sha256;
    std::vector<std::string> columns;
    std::string label_column;
    std::string scale;
    FitConfig fit_config;
    std::string created_utc;
    std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

std::string sha256_file(const std::string& path);
std::string current_timestamp_utc();  // SOURCE_DATE_EPOCH or epoch 0

}  // namespace archetypes
