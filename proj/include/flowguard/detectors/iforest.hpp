#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/detectors/calibration.hpp"

namespace flowguard::detectors {

// Harmonic number H(n); exact summation for small n, asymptotic expansion
// beyond (error far below 1e-12).
double harmonic_number(std::size_t n);

// Average path length of an unsuccessful BST search over n points:
// c(n) = 2 H(n-1) - 2 (n-1) / n, with c(0) = c(1) = 0.
double average_path_length(std::size_t n);

// Subsample size per tree: "auto" = min(256, n), a fraction of n, or a count.
struct MaxSamples {
    enum class Kind { Auto, Fraction, Count };
    Kind kind = Kind::Auto;
    double value = 0.0;

    static MaxSamples automatic() { return {Kind::Auto, 0.0}; }
    static MaxSamples fraction(double f) { return {Kind::Fraction, f}; }
    static MaxSamples count(std::size_t c) { return {Kind::Count, static_cast<double>(c)}; }
    // Accepts "auto", "25%", "0.25" (fraction when <= 1) or an integer count.
    static MaxSamples parse(const std::string& text);

    std::size_t resolve(std::size_t n) const;
    std::string to_string() const;
    bool operator==(const MaxSamples&) const = default;
};

class IsolationTree {
public:
    // 16 bytes. Internal nodes: value = split threshold, link = index of the
    // left child (right child is link + 1). Leaves: feature = -1, link = number
    // of training points that reached the leaf, value = depth + c(link).
    struct Node {
        double value = 0.0;
        std::uint32_t link = 0;
        std::int32_t feature = -1;

        bool leaf() const noexcept { return feature < 0; }
        bool operator==(const Node&) const = default;
    };

    // Depth at which `point` lands plus c(leaf size).
    double path_length(std::span<const double> point) const;
    std::size_t max_depth() const;
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

    void save(BinaryWriter& w) const;
    static IsolationTree load(BinaryReader& r);

    friend IsolationTree build_isolation_tree(const Matrix& data, std::span<const std::size_t> sample,
                                              std::size_t depth_limit, std::uint64_t seed);

    bool operator==(const IsolationTree&) const = default;

private:
    std::vector<Node> nodes_;
};

// Random axis-aligned splits: feature uniform over the node's non-constant
// features, threshold uniform in [min, max) of that feature; x <= threshold
// goes left. Growth stops at one point, all-duplicate nodes or depth_limit.
IsolationTree build_isolation_tree(const Matrix& data, std::span<const std::size_t> sample, std::size_t depth_limit,
                                   std::uint64_t seed);

class IForestModel {
public:
    std::vector<IsolationTree> trees;
    std::size_t subsample_size = 0;
    std::size_t n_features = 0;
    std::uint64_t seed = 0;
    ThresholdCalibration calibration;

    std::size_t n_trees() const noexcept { return trees.size(); }

    // 2^(-E[h(x)] / c(subsample_size)); in (0, 1), higher = more anomalous.
    double score(std::span<const double> point) const;
    bool predict(std::span<const double> point) const { return calibration.flags(score(point)); }

    void save(BinaryWriter& w) const;
    static IForestModel load(BinaryReader& r);

    bool operator==(const IForestModel&) const = default;
};

// Tree t is grown from its own seed derive_seed(seed, t) on an independent
// subsample drawn without replacement, so the forest does not depend on the
// thread count.
IForestModel fit_iforest(const Matrix& train, std::size_t n_trees, MaxSamples max_samples, std::uint64_t seed,
                         std::size_t threads = 1);

inline double iforest_score(const IForestModel& model, std::span<const double> point) { return model.score(point); }

} // namespace flowguard::detectors
