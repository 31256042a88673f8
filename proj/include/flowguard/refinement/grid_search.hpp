#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/dataio/dataset.hpp"
#include "flowguard/refinement/feature_selection.hpp"
#include "flowguard/refinement/forest.hpp"

namespace flowguard::refinement {

// Fold of every row; each class is shuffled and dealt round-robin.
std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t folds, std::uint64_t seed);

// Trains on `train` and returns labels for the rows of `validation`.
using FitPredict = std::function<std::vector<int>(const dataio::FlowDataset& train, const Matrix& validation)>;
// Sees each fold's (balanced) training part and its validation part.
using FoldObserver =
    std::function<void(std::size_t fold, const dataio::FlowDataset& train, const dataio::FlowDataset& validation)>;

// Stratified k-fold CV. SMOTE (with k = smote_k) is applied to each training
// part only. A fold whose training or validation part lacks a class yields
// nullopt. Fold f's SMOTE seed is derive_seed(seed, f).
std::vector<std::optional<double>> cross_validate(const dataio::FlowDataset& ds, std::size_t folds, std::size_t smote_k,
                                                  std::uint64_t seed, const FitPredict& fit_predict,
                                                  const FoldObserver& observer = {});

struct ForestGrid {
    std::vector<std::size_t> n_estimators{100};
    std::vector<std::size_t> max_depth{0};
    std::vector<std::size_t> min_samples_split{2};
    std::vector<std::size_t> min_samples_leaf{1};

    // Full search space: trees 100..500 step 50, depth {none,5,10,15},
    // split 2..8 step 2, leaf {1,2,4,6}.
    static ForestGrid full();
    static ForestGrid single(const ForestParams& p);

    std::vector<ForestParams> expand() const;
    nlohmann::json to_json() const;
    static ForestGrid from_json(const nlohmann::json& j);
};

struct RefinementConfig {
    std::size_t min_subset = 5;
    std::size_t max_subset = 30;
    std::size_t folds = 10;
    std::size_t smote_k = 5;
    ForestGrid grid;
    std::uint64_t seed = 0;
    std::size_t threads = 0;

    nlohmann::json to_json() const;
    static RefinementConfig from_json(const nlohmann::json& j);
};

struct GridCandidate {
    std::size_t subset_size = 0;
    ForestParams params;
    std::vector<std::optional<double>> fold_f1;
    double mean_f1 = 0.0;
    double std_f1 = 0.0;
    bool valid = false;
};

struct GridSearchReport {
    std::vector<GridCandidate> candidates;
    std::size_t winner = 0;
    std::vector<std::size_t> winner_features;

    const GridCandidate& best() const { return candidates.at(winner); }
    std::string to_csv() const;
    std::string to_text() const;
};

// Highest mean F1 among valid candidates; ties go to the smaller subset,
// then fewer trees, then shallower depth (unlimited counts as deepest).
std::size_t pick_winner(std::span<const GridCandidate> candidates);

// For each subset size (top-s features of `ranking`) and grid point, runs
// CV with SMOTE inside the training folds. The winner is refitted on the
// SMOTE-balanced full training set.
std::pair<ForestModel, GridSearchReport> train_refinement(const dataio::FlowDataset& train,
                                                          std::span<const FeatureGain> ranking,
                                                          const RefinementConfig& config);

} // namespace flowguard::refinement
