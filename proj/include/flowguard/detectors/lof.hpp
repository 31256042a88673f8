#pragma once

#include <span>
#include <vector>

#include "flowguard/core/binary_io.hpp"
#include "flowguard/detectors/calibration.hpp"
#include "flowguard/detectors/knn.hpp"

namespace flowguard::detectors {

// Floor applied to the mean reachability distance before inverting it into
// a local reachability density.
inline constexpr double kLrdEpsilon = 1e-12;

// Local Outlier Factor in novelty mode: the reference set is fixed at fit
// time and queries never join it.
class LofModel {
public:
    LofModel() = default;

    std::size_t k() const noexcept { return k_; }
    const Matrix& reference() const noexcept { return index_.points(); }
    const std::vector<double>& k_distances() const noexcept { return k_distance_; }
    const std::vector<double>& lrds() const noexcept { return lrd_; }

    // Mean over the k nearest references o of lrd(o) / lrd(point).
    double score(std::span<const double> point) const;
    // Leave-self-out LOF of every reference point.
    std::vector<double> training_scores() const;

    ThresholdCalibration calibration;
    bool predict(std::span<const double> point) const { return calibration.flags(score(point)); }

    void save(BinaryWriter& w) const;
    static LofModel load(BinaryReader& r);

    friend LofModel fit_lof(const Matrix& train, std::size_t k);

private:
    double lrd_of(const std::vector<Neighbor>& neighbors) const;

    KdTree index_;
    std::size_t k_ = 0;
    std::vector<double> k_distance_;
    std::vector<double> lrd_;
};

LofModel fit_lof(const Matrix& train, std::size_t k);

inline double lof_score(const LofModel& model, std::span<const double> point) { return model.score(point); }

} // namespace flowguard::detectors
