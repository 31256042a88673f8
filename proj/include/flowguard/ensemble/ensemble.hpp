#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <json.hpp>

#include "flowguard/dataio/dataset.hpp"
#include "flowguard/detectors/iforest.hpp"
#include "flowguard/detectors/lof.hpp"
#include "flowguard/reduction/pca.hpp"

namespace flowguard::ensemble {

enum class LearnerKind : std::uint8_t { Lof = 0, IForest = 1 };

struct LofParams {
    std::size_t n_neighbors = 5;
    double contamination = 0.14;
};

struct IForestParams {
    std::size_t n_estimators = 100;
    detectors::MaxSamples max_samples = detectors::MaxSamples::fraction(1.0);
    double contamination = 0.10;
};

// Learner j of a kind uses variants[j % variants.size()]; a single entry
// gives every learner of that kind the same hyperparameters.
struct EnsembleConfig {
    std::size_t n_lof = 50;
    std::size_t n_iforest = 50;
    std::size_t lof_pca_components = 7;
    std::size_t iforest_pca_components = 16;
    std::vector<LofParams> lof_variants{LofParams{}};
    std::vector<IForestParams> iforest_variants{IForestParams{}};
    // Rows per bootstrap sample; 0 = size of the benign training set.
    std::size_t bootstrap_size = 0;
    std::size_t threads = 0;

    void validate() const;
    nlohmann::json to_json() const;
    static EnsembleConfig from_json(const nlohmann::json& doc);
};

struct Learner {
    LearnerKind kind = LearnerKind::Lof;
    std::uint64_t bootstrap_seed = 0;
    std::variant<detectors::LofModel, detectors::IForestModel> model;

    // Anomaly score of a point already projected into this learner's PCA space.
    double score(std::span<const double> projected) const;
    const detectors::ThresholdCalibration& calibration() const;
    std::uint8_t predict(std::span<const double> projected) const { return calibration().flags(score(projected)) ? 1 : 0; }
};

struct VotePrediction {
    int label = 0;
    double score_benign = 0.0;
    double score_attack = 0.0;
    bool tie = false;

    bool operator==(const VotePrediction&) const = default;
};

enum class VotingMode { MV, WMV };

// Weighted majority vote over per-learner predictions (0 benign, 1 attack).
// Each learner adds its weight to the class it predicts, summed in learner
// order; attack wins only when its score is strictly larger.
VotePrediction wmv_vote(std::span<const std::uint8_t> votes, std::span<const double> weights);
// Unweighted vote counts; equal counts resolve to benign with tie = true.
VotePrediction mv_vote(std::span<const std::uint8_t> votes);

// Per-learner 0/1 predictions for every row of a dataset, stored learner-major.
struct LearnerPredictions {
    std::size_t n_learners = 0;
    std::size_t n_rows = 0;
    std::vector<std::uint8_t> votes;

    std::span<const std::uint8_t> learner(std::size_t l) const { return {votes.data() + l * n_rows, n_rows}; }
    std::vector<std::uint8_t> row(std::size_t r) const;
};

class EnsembleModel {
public:
    EnsembleConfig config;
    std::uint64_t master_seed = 0;
    reduction::PcaModel lof_pca;
    reduction::PcaModel iforest_pca;
    std::vector<Learner> learners;
    // Validation F1 per learner; empty until weigh_learners has run.
    std::vector<double> weights;

    bool weighted() const noexcept { return !learners.empty() && weights.size() == learners.size(); }
    std::size_t count(LearnerKind kind) const;
    std::size_t input_dim() const noexcept { return lof_pca.n_features(); }

    std::vector<std::uint8_t> votes(std::span<const double> point) const;
    VotePrediction wmv_predict(std::span<const double> point) const;
    VotePrediction mv_predict(std::span<const double> point) const;

    LearnerPredictions predict_all(const Matrix& features, std::size_t threads = 0) const;

    void save(BinaryWriter& w) const;
    static EnsembleModel load(BinaryReader& r);
};

// Seed of the j-th learner of `kind`: derive_seed(derive_seed(master, kind), j).
std::uint64_t learner_seed(std::uint64_t master_seed, LearnerKind kind, std::size_t j);

// Fits both PCA models on the benign training rows, then trains every
// learner on its own bootstrap (with replacement) of the projected rows and
// calibrates its threshold on that bootstrap's scores.
EnsembleModel build_ensemble(const dataio::FlowDataset& benign_train, const EnsembleConfig& config,
                             std::uint64_t master_seed);

// F1 of each learner alone on the validation set (attack positive).
std::vector<double> weigh_learners(const EnsembleModel& ens, const dataio::FlowDataset& validation);
std::vector<double> weigh_learners(const LearnerPredictions& preds, std::span<const int> truth);

std::vector<VotePrediction> vote_all(const LearnerPredictions& preds, std::span<const double> weights, VotingMode mode);

// MV: fraction of rows with equal vote counts. WMV: fraction of rows with
// Score_attack == Score_benign exactly.
double tie_rate(const LearnerPredictions& preds, std::span<const double> weights, VotingMode mode);
double tie_rate(const EnsembleModel& ens, const dataio::FlowDataset& ds, VotingMode mode);

} // namespace flowguard::ensemble
