#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/refinement/tree.hpp"

namespace flowguard::explain {

using LabelFn = std::function<int(std::span<const double>)>;

struct SurrogateConfig {
    std::size_t max_depth = 0; // 0 = unlimited
    std::size_t min_samples_leaf = 5;

    nlohmann::json to_json() const;
    static SurrogateConfig from_json(const nlohmann::json& j);
};

struct SurrogateTree {
    refinement::DecisionTree tree;
    std::vector<std::string> feature_names;
    double fidelity = 0.0; // agreement with the reference labels on the fitting data
    std::size_t training_size = 0;

    int predict(std::span<const double> x) const { return tree.predict(x); }
    void save(BinaryWriter& w) const;
    static SurrogateTree load(BinaryReader& r);
};

// Single CART tree (all features per split) fitted to a reference model's
// labels on `data`.
SurrogateTree fit_surrogate(const Matrix& data, std::span<const int> reference_labels, std::vector<std::string> names,
                            const SurrogateConfig& config, std::uint64_t seed);
SurrogateTree fit_surrogate(const LabelFn& model, const Matrix& data, std::vector<std::string> names,
                            const SurrogateConfig& config, std::uint64_t seed);

// Fraction of rows where the surrogate agrees with the reference labels.
double fidelity(const SurrogateTree& s, const Matrix& data, std::span<const int> reference_labels);

struct Condition {
    std::size_t feature = 0;
    std::string name;
    std::optional<double> lower; // feature > lower
    std::optional<double> upper; // feature <= upper

    bool operator==(const Condition&) const = default;
};

struct Rule {
    std::vector<Condition> conditions; // ordered by feature index
    int predicted = 0;
    std::size_t leaf = 0;
    std::size_t coverage = 0;
    double purity = 0.0; // share of covered rows whose reference label equals `predicted`

    bool matches(std::span<const double> x) const;
    std::string to_string() const;
};

struct RuleSet {
    std::vector<Rule> rules; // left-first path order

    std::string to_text() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

// One rule per leaf; each condition is the intersection of the path's
// thresholds on one feature. Coverage and purity are measured on `data`.
RuleSet extract_rules(const SurrogateTree& s, const Matrix& data, std::span<const int> reference_labels);

} // namespace flowguard::explain
