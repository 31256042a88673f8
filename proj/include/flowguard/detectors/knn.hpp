#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flowguard/core/matrix.hpp"

namespace flowguard::detectors {

struct Neighbor {
    double dist2;
    std::size_t index;

    friend bool operator<(const Neighbor& a, const Neighbor& b) noexcept {
        return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
    }
};

// Exact k-nearest-neighbour index over a fixed point set. Results are the k
// smallest (squared distance, index) pairs in lexicographic order, i.e. the
// same set a brute-force scan with index tie-breaking returns.
class KdTree {
public:
    KdTree() = default;
    explicit KdTree(Matrix points, std::size_t leaf_size = 16);

    // `exclude` skips one reference index (used for leave-self-out queries).
    std::vector<Neighbor> knn(std::span<const double> query, std::size_t k,
                              std::optional<std::size_t> exclude = std::nullopt) const;

    const Matrix& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.rows(); }
    std::size_t dims() const noexcept { return points_.cols(); }

private:
    struct Node {
        std::size_t begin, end; // range in order_
        int split_dim = -1;     // -1 for leaves
        double split_value = 0.0;
        std::size_t left = 0, right = 0;
    };

    std::size_t build(std::size_t begin, std::size_t end);
    void search(std::size_t node, std::span<const double> q, std::size_t k, std::optional<std::size_t> exclude,
                std::vector<Neighbor>& heap) const;

    Matrix points_;
    std::vector<std::size_t> order_;
    std::vector<Node> nodes_;
    std::size_t leaf_size_ = 16;
};

} // namespace flowguard::detectors
