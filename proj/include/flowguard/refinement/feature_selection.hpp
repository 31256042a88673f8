#pragma once

#include <span>
#include <string>
#include <vector>

#include "flowguard/core/matrix.hpp"

namespace flowguard::refinement {

struct FeatureGain {
    std::size_t feature = 0;
    std::string name;
    double gain = 0.0; // bits
};

// Bin index of every value of one column. Columns with at most `bins`
// distinct values get one bin per value; others are cut into `bins`
// equal-frequency bins (edges at the i/bins order statistics, a value goes
// to the first bin whose upper edge is >= the value).
std::vector<std::size_t> discretize(std::span<const double> column, std::size_t bins = 10);

// Entropy in bits of a 0/1 label vector.
double label_entropy(std::span<const int> labels);

// H(label) - H(label | binned feature), one entry per column, ranked by
// gain descending with ties broken by column index.
std::vector<FeatureGain> information_gain(const Matrix& features, std::span<const int> labels,
                                          std::span<const std::string> names = {}, std::size_t bins = 10);

} // namespace flowguard::refinement
