#pragma once

#include <span>
#include <vector>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/core/matrix.hpp"

namespace flowguard::reduction {

// Principal component projection. Rows of `components` are orthonormal and
// ordered by decreasing explained variance; each row's largest-magnitude
// coordinate is positive.
struct PcaModel {
    std::vector<double> mean;
    Matrix components; // n_components x n_features
    std::vector<double> explained_variance;
    std::vector<double> explained_variance_ratio;

    std::size_t n_components() const noexcept { return components.rows(); }
    std::size_t n_features() const noexcept { return components.cols(); }

    Matrix transform(const Matrix& data) const;
    void transform_row(std::span<const double> in, std::span<double> out) const;
    Matrix inverse_transform(const Matrix& projected) const;

    void save(BinaryWriter& w) const;
    static PcaModel load(BinaryReader& r);

    bool operator==(const PcaModel&) const = default;
};

// Computed from the SVD of the mean-centred data. Components beyond the
// data's rank carry ~0 variance.
PcaModel fit_pca(const Matrix& data, std::size_t n_components);

} // namespace flowguard::reduction
