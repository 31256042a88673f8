#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/core/matrix.hpp"

namespace flowguard::explain {

// Attack probability of a model for one input row.
using ProbabilityFn = std::function<double(std::span<const double>)>;

// Per-feature quartile bins of the training data and a capped, evenly
// spaced sample of the values inside each bin (used to draw perturbations).
struct LimeStats {
    std::vector<std::string> feature_names;
    std::vector<std::array<double, 3>> quartiles;
    std::vector<std::array<double, 4>> bin_frequency;
    std::vector<std::array<std::vector<double>, 4>> bin_values;

    std::size_t n_features() const noexcept { return quartiles.size(); }
    std::size_t bin_of(std::size_t feature, double v) const;
    std::string describe_bin(std::size_t feature, std::size_t bin) const;

    static LimeStats fit(const Matrix& train, std::vector<std::string> names, std::size_t max_values_per_bin = 256);
    void save(BinaryWriter& w) const;
    static LimeStats load(BinaryReader& r);
};

struct LimeConfig {
    std::size_t n_samples = 5000;
    std::size_t top_k = 10;
    double ridge_alpha = 1.0;
    double kernel_width = 0.0; // 0 = 0.75 * sqrt(n_features)

    nlohmann::json to_json() const;
    static LimeConfig from_json(const nlohmann::json& j);
};

struct Contribution {
    std::size_t feature = 0;
    std::string name;
    std::string condition; // the instance's bin, e.g. "0.25 < dst_bytes <= 0.5"
    double weight = 0.0;
};

struct LocalExplanation {
    std::string instance_id;
    int predicted_label = 0;
    double predicted_probability = 0.0;
    std::vector<Contribution> contributions; // |weight| descending
    double intercept = 0.0;
    double local_fit_r2 = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    // Set when a truth label was supplied and disagrees with the prediction.
    bool misclassified = false;
    int truth = -1;

    nlohmann::json to_json() const;
    // One signed bar per contribution, scaled to the largest |weight|.
    std::string to_text(std::size_t bar_width = 30) const;
};

// Perturbation-based local explanation. Sample 0 is the instance itself;
// every other sample draws, per feature, a quartile bin from the training
// bin frequencies: the same bin as the instance keeps the instance value
// (mask 1), another bin takes a training value from that bin (mask 0).
// Samples are weighted by exp(-h / width^2), h the number of masked-out
// features, and a ridge regression (unpenalized intercept) of the model
// probability on the masks gives the contributions.
LocalExplanation lime_explain(const ProbabilityFn& model, std::span<const double> instance, const LimeStats& stats,
                              const LimeConfig& config, std::uint64_t seed);

struct WeightedRidge {
    std::vector<double> coef;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Minimizes sum w_i (y_i - b - x_i.beta)^2 + alpha |beta|^2.
WeightedRidge weighted_ridge(const Matrix& x, std::span<const double> y, std::span<const double> w, double alpha);

} // namespace flowguard::explain
