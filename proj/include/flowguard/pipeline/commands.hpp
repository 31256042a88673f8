#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/dataio/dataset.hpp"
#include "flowguard/ensemble/ensemble.hpp"
#include "flowguard/explain/lime.hpp"
#include "flowguard/explain/surrogate.hpp"
#include "flowguard/metrics/metrics.hpp"
#include "flowguard/pipeline/config.hpp"
#include "flowguard/pipeline/review.hpp"
#include "flowguard/refinement/forest.hpp"
#include "flowguard/refinement/grid_search.hpp"
#include "flowguard/refinement/pseudo_labels.hpp"

namespace flowguard::pipeline {

// File layout of one run directory.
struct RunLayout {
    std::filesystem::path root;

    std::filesystem::path prepared(const std::string& split) const { return root / "prepared" / (split + ".csv"); }
    std::filesystem::path preprocess() const { return root / "prepared" / "preprocess.json"; }
    std::filesystem::path ensemble() const { return root / "ensemble.fga"; }
    std::filesystem::path evaluation() const { return root / "ensemble_eval.fga"; }
    std::filesystem::path refinement() const { return root / "refinement.fga"; }
    std::filesystem::path surrogate() const { return root / "surrogate.fga"; }
    std::filesystem::path review_log() const { return root / "review" / "decisions.jsonl"; }
    std::filesystem::path reviewed_labels() const { return root / "review" / "pseudo_labels.json"; }
    std::filesystem::path reports() const { return root / "reports"; }
    std::filesystem::path resolved_config() const { return root / "config.resolved.json"; }
};

// Categorical encoding and scaling fitted during prepare.
struct Preprocessor {
    dataio::FeatureSchema schema;
    dataio::OneHotEncoding encoding;
    dataio::ScalerParams scaler;
    std::vector<std::string> feature_names;

    nlohmann::json to_json() const;
    static Preprocessor from_json(const nlohmann::json& j);
};

struct PreparedData {
    dataio::FlowDataset train; // benign only
    dataio::FlowDataset validation;
    dataio::FlowDataset test;
    dataio::CleaningReport train_cleaning;
    dataio::CleaningReport holdout_cleaning;
};

PreparedData cmd_prepare(const PipelineConfig& cfg);
PreparedData load_prepared(const PipelineConfig& cfg);

struct EnsembleRun {
    ensemble::EnsembleModel model;
    ensemble::LearnerPredictions validation_votes;
};

EnsembleRun cmd_train_ensemble(const PipelineConfig& cfg);
EnsembleRun load_ensemble_run(const std::filesystem::path& path);
void save_ensemble_run(const EnsembleRun& run, const PipelineConfig& cfg, const std::filesystem::path& path);

struct EnsembleEvaluation {
    ensemble::LearnerPredictions test_votes;
    std::vector<ensemble::VotePrediction> mv;
    std::vector<ensemble::VotePrediction> wmv;
    metrics::Summary mv_summary;
    metrics::Summary wmv_summary;
    double mv_tie_rate = 0.0;
    double wmv_tie_rate = 0.0;
    metrics::ClassRateTable mv_rates;
    metrics::ClassRateTable wmv_rates;
};

EnsembleEvaluation cmd_evaluate(const PipelineConfig& cfg);

struct RefinementRun {
    refinement::ForestModel model;
    refinement::GridSearchReport report;
    refinement::PseudoLabelSet pseudo;
    std::vector<refinement::FeatureGain> ranking;
    explain::LimeStats lime_stats;
    std::size_t corpus_rows = 0;
};

RefinementRun cmd_refine(const PipelineConfig& cfg, std::optional<refinement::PseudoMode> mode = std::nullopt);
RefinementRun load_refinement_run(const std::filesystem::path& path);

struct FinalEvaluation {
    metrics::MetricsTable table; // MV baseline, WMV ensemble, final
    metrics::Summary final_summary;
    metrics::Summary wmv_summary;
    metrics::ClassRateTable wmv_rates;
    metrics::ClassRateTable final_rates;
    std::vector<int> final_labels;
    std::vector<double> final_probs;
    // Refinement classifier alone on the test rows the WMV ensemble got wrong.
    std::size_t ensemble_error_rows = 0;
    std::size_t ensemble_errors_corrected = 0;
    metrics::Summary ensemble_errors_summary;
};

FinalEvaluation cmd_evaluate_final(const PipelineConfig& cfg);

// Explains test rows by row id, or (errors_only) the rows the final model
// misclassifies, up to `limit`. Unknown ids throw NotFoundError.
std::vector<explain::LocalExplanation> cmd_explain(const PipelineConfig& cfg, const std::vector<std::int64_t>& row_ids,
                                                   bool errors_only, std::size_t limit = 10);

struct SurrogateRun {
    explain::SurrogateTree surrogate;
    explain::RuleSet rules;
};

SurrogateRun cmd_surrogate(const PipelineConfig& cfg);

// Review store over the validation detections of a trained ensemble.
std::unique_ptr<ReviewStore> make_review_store(const PipelineConfig& cfg);
// Writes the reviewed pseudo-label set next to the decision log.
nlohmann::json write_reviewed_labels(const PipelineConfig& cfg, const refinement::PseudoLabelSet& set);
refinement::PseudoLabelSet cmd_review_auto_accept(const PipelineConfig& cfg);

// Whole pipeline with auto-accepted review; returns the final evaluation.
FinalEvaluation cmd_run_all(const PipelineConfig& cfg);

} // namespace flowguard::pipeline
