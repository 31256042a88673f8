#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flowguard/dataio/dataset.hpp"
#include "flowguard/refinement/tree.hpp"

namespace flowguard::refinement {

struct ForestParams {
    std::size_t n_estimators = 100;
    std::size_t max_depth = 0; // 0 = unlimited
    std::size_t min_samples_split = 2;
    std::size_t min_samples_leaf = 1;

    void validate() const;
    std::string describe() const;
    nlohmann::json to_json() const;
    static ForestParams from_json(const nlohmann::json& j);
    bool operator==(const ForestParams&) const = default;
};

// Random forest of CART trees, each grown on a bootstrap of the training
// rows with sqrt(n_features) candidate features per split.
class ForestModel {
public:
    ForestParams params;
    std::uint64_t seed = 0;
    // Column indices into the input feature space, in use order.
    std::vector<std::size_t> selected_features;
    std::vector<std::string> feature_names; // of the selected columns
    std::size_t n_input_features = 0;
    std::vector<DecisionTree> trees;

    // Fraction of trees voting attack, for a row already restricted to the
    // selected features.
    double attack_probability(std::span<const double> selected) const;
    // label = 1 iff prob > 0.5; input is a full-width row.
    std::pair<int, double> predict(std::span<const double> row) const;
    std::vector<double> restrict(std::span<const double> row) const;
    Matrix restrict(const Matrix& m) const { return m.select_cols(selected_features); }

    // Labels and probabilities for every row of a full-width matrix.
    std::pair<std::vector<int>, std::vector<double>> predict_all(const Matrix& m, std::size_t threads = 0) const;

    void save(BinaryWriter& w) const;
    static ForestModel load(BinaryReader& r);
    bool operator==(const ForestModel&) const = default;
};

// Tree t uses seed derive_seed(seed, t) for its bootstrap and feature draws.
ForestModel fit_forest(const dataio::FlowDataset& train, std::span<const std::size_t> features, const ForestParams& params,
                       std::uint64_t seed, std::size_t threads = 0);

std::pair<int, double> rf_predict(const ForestModel& model, std::span<const double> row);

} // namespace flowguard::refinement
