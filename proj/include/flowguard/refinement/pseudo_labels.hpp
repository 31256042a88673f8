#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace flowguard::refinement {

enum class PseudoMode { Oracle, Reviewed, Raw };

std::string to_string(PseudoMode m);
PseudoMode parse_pseudo_mode(const std::string& s);

enum class ReviewAction { Approve, Reject, Relabel };

std::string to_string(ReviewAction a);
ReviewAction parse_review_action(const std::string& s);

struct ReviewDecision {
    std::size_t row = 0;
    ReviewAction action = ReviewAction::Approve;
    int label = 0; // meaningful for Relabel only
    std::string timestamp;

    // Same row, same action and (for relabel) same label; timestamps ignored.
    bool same_effect(const ReviewDecision& o) const noexcept {
        return row == o.row && action == o.action && (action != ReviewAction::Relabel || label == o.label);
    }
    nlohmann::json to_json() const;
    static ReviewDecision from_json(const nlohmann::json& j);
};

// Provisional labels for a subset of rows of a source dataset.
struct PseudoLabelSet {
    PseudoMode mode = PseudoMode::Raw;
    std::vector<std::size_t> rows;
    std::vector<int> labels;
    std::vector<ReviewDecision> decisions;
    // Reviewed mode: rows with no decision, excluded from the set.
    std::size_t undecided = 0;

    std::size_t size() const noexcept { return rows.size(); }
    bool operator==(const PseudoLabelSet& o) const {
        return mode == o.mode && rows == o.rows && labels == o.labels && undecided == o.undecided;
    }
    nlohmann::json to_json() const;
    static PseudoLabelSet from_json(const nlohmann::json& j);
};

// oracle: keep rows where pred == truth. reviewed: keep approved rows with
// the prediction and relabelled rows with the analyst label, drop rejected
// and undecided rows. raw: keep everything.
PseudoLabelSet make_pseudo_labels(std::span<const int> preds, PseudoMode mode,
                                  std::optional<std::span<const int>> truth = std::nullopt,
                                  std::optional<std::span<const ReviewDecision>> decisions = std::nullopt);

} // namespace flowguard::refinement
