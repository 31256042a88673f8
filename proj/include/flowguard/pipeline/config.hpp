#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/dataio/dataset.hpp"
#include "flowguard/ensemble/ensemble.hpp"
#include "flowguard/explain/lime.hpp"
#include "flowguard/explain/surrogate.hpp"
#include "flowguard/refinement/grid_search.hpp"
#include "flowguard/refinement/pseudo_labels.hpp"

namespace flowguard::pipeline {

// Which rows the min-max scaler is fitted on.
enum class ScalerFit { TrainFiles, BenignTrain, All };

// Where the flows come from and how they are split.
//   train_files  --clean--> split(train_fraction) --benign only--> train
//                               '-> remainder --+
//   holdout_files --clean-----------------------+--split(validation_fraction)--> validation / test
struct DatasetConfig {
    std::string name;
    std::filesystem::path schema;
    std::filesystem::path data_dir;
    std::vector<std::string> train_files;
    std::vector<std::string> holdout_files;
    std::vector<std::string> one_hot;
    double train_fraction = 1.0; // 1.0 = every train-file row is a training candidate
    double validation_fraction = 0.5;
    // Optional stratified subsample of the holdout (e.g. 0.05); 1.0 = all.
    double holdout_sample = 1.0;
    dataio::StratifyBy stratify_by = dataio::StratifyBy::Category;
    ScalerFit scaler_fit = ScalerFit::TrainFiles;
};

struct ReviewConfig {
    std::string queue_order = "uncertain"; // uncertain | row
    std::size_t page_size = 50;
    std::string bind_address = "127.0.0.1";
    int port = 8765;
    explain::LimeConfig lime{300, 10, 1.0, 0.0};
};

struct PipelineConfig {
    DatasetConfig dataset;
    ensemble::EnsembleConfig ensemble;
    ensemble::VotingMode voting = ensemble::VotingMode::WMV;
    refinement::PseudoMode pseudo_mode = refinement::PseudoMode::Oracle;
    refinement::RefinementConfig refinement;
    explain::LimeConfig lime;
    explain::SurrogateConfig surrogate;
    ReviewConfig review;
    std::filesystem::path output_dir = "runs/default";
    std::uint64_t seed = 42;
    std::size_t threads = 0;

    // Checks ranges and cross-field consistency; throws ConfigError.
    void validate() const;
    nlohmann::json to_json() const;
    // Relative paths are resolved against `base_dir`.
    static PipelineConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
    static PipelineConfig load(const std::filesystem::path& path);
};

// JSON Schema (draft 2020-12) describing the config document.
nlohmann::json config_schema();

} // namespace flowguard::pipeline
