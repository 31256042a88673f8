#pragma once

#include <span>

namespace flowguard::detectors {

// Decision cut on an anomaly score (higher = more anomalous). A point is
// flagged as attack when score > threshold.
struct ThresholdCalibration {
    double contamination = 0.1;
    double threshold = 0.0;
    // Quantile level the threshold was read at: 1 - contamination.
    double train_score_quantile = 0.9;

    bool flags(double score) const noexcept { return score > threshold; }
    bool operator==(const ThresholdCalibration&) const = default;
};

// Empirical quantile with linear interpolation between order statistics:
// position h = q * (n - 1), value = x[floor h] + frac(h) * (x[floor h + 1] - x[floor h]).
double linear_quantile(std::span<const double> values, double q);

// Threshold at the (1 - contamination) quantile of the training scores.
// contamination must lie in (0, 0.5].
ThresholdCalibration calibrate_threshold(std::span<const double> train_scores, double contamination);

} // namespace flowguard::detectors
