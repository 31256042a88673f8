#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/core/matrix.hpp"

namespace flowguard::refinement {

struct TreeParams {
    std::size_t max_depth = 0; // 0 = unlimited
    std::size_t min_samples_split = 2;
    std::size_t min_samples_leaf = 1;
    // Features examined per split; 0 = all. If none of the drawn features
    // admits a valid split, the remaining ones are tried in draw order.
    std::size_t max_features = 0;

    void validate() const;
};

// Binary CART classifier (Gini impurity). x[feature] <= threshold goes left.
class DecisionTree {
public:
    struct Node {
        double threshold = 0.0;
        double attack_fraction = 0.0; // among training samples reaching the node
        std::int32_t feature = -1;    // -1 for leaves
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        std::uint32_t samples = 0;

        bool leaf() const noexcept { return feature < 0; }
        // Majority class; an even split goes to benign.
        int label() const noexcept { return attack_fraction > 0.5 ? 1 : 0; }
        bool operator==(const Node&) const = default;
    };

    std::size_t leaf_index(std::span<const double> x) const;
    int predict(std::span<const double> x) const { return nodes_[leaf_index(x)].label(); }

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t n_features() const noexcept { return n_features_; }
    std::size_t depth() const;
    std::size_t leaf_count() const;

    // Builds a tree from explicit nodes (node 0 is the root). Used by tests
    // and by model loading.
    static DecisionTree from_nodes(std::vector<Node> nodes, std::size_t n_features);

    void save(BinaryWriter& w) const;
    static DecisionTree load(BinaryReader& r);
    bool operator==(const DecisionTree&) const = default;

private:
    friend DecisionTree fit_tree(const Matrix&, std::span<const int>, std::span<const std::size_t>, const TreeParams&,
                                 std::uint64_t);
    std::vector<Node> nodes_;
    std::size_t n_features_ = 0;
};

// Fits on the rows listed in `sample` (duplicates allowed, e.g. a bootstrap).
// An empty sample means every row. Thresholds are midpoints between
// consecutive distinct values; ties between equally good splits keep the
// first one found (feature draw order, then ascending threshold).
DecisionTree fit_tree(const Matrix& x, std::span<const int> y, std::span<const std::size_t> sample,
                      const TreeParams& params, std::uint64_t seed);

} // namespace flowguard::refinement
