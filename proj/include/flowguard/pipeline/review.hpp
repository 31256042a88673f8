#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowguard/core/matrix.hpp"
#include "flowguard/refinement/pseudo_labels.hpp"

namespace flowguard::pipeline {

enum class ItemStatus { Pending, Approved, Rejected, Relabelled };

std::string to_string(ItemStatus s);

struct ReviewItem {
    std::size_t id = 0; // row index in the reviewed dataset
    std::int64_t row_id = 0;
    int ensemble_label = 0;
    double score_attack = 0.0;
    double score_benign = 0.0;
    ItemStatus status = ItemStatus::Pending;
    int relabel = -1;

    double margin() const noexcept { return score_attack > score_benign ? score_attack - score_benign : score_benign - score_attack; }
};

// Analyst decisions over a fixed set of detections. Every accepted decision
// is appended to a JSONL log before it takes effect; constructing a store
// over an existing log replays it. Reads may run concurrently, writes are
// serialized.
class ReviewStore {
public:
    using Explainer = std::function<nlohmann::json(std::size_t id)>;

    ReviewStore(std::vector<ReviewItem> items, Matrix features, std::vector<std::string> feature_names,
                std::filesystem::path log_path, std::string queue_order = "uncertain", Explainer explainer = {});

    std::size_t size() const noexcept { return items_.size(); }

    // Pending items in queue order; page numbers start at 0.
    nlohmann::json queue(std::size_t page, std::size_t page_size) const;
    nlohmann::json item(std::size_t id) const;
    nlohmann::json progress() const;

    struct Outcome {
        bool changed = false;
        nlohmann::json item;
    };
    // Repeating an item's current decision is a no-op; a different decision
    // on a decided item throws ConflictError. Unknown ids throw NotFoundError.
    Outcome decide(refinement::ReviewDecision d);

    // Approves every pending item.
    std::size_t auto_accept();

    // Throws ConflictError when nothing has been decided yet.
    refinement::PseudoLabelSet finalize() const;

    std::vector<refinement::ReviewDecision> decisions() const;
    std::vector<int> ensemble_labels() const;

    static std::vector<refinement::ReviewDecision> read_log(const std::filesystem::path& path);

private:
    Outcome apply(const refinement::ReviewDecision& d, bool log);
    nlohmann::json summary(const ReviewItem& it) const;
    nlohmann::json detail(const ReviewItem& it) const;
    void append_log(const refinement::ReviewDecision& d);

    std::vector<ReviewItem> items_;
    std::vector<std::size_t> order_;
    Matrix features_;
    std::vector<std::string> names_;
    std::filesystem::path log_path_;
    Explainer explainer_;
    std::vector<refinement::ReviewDecision> decisions_;
    mutable std::shared_mutex mutex_;
    mutable std::mutex explain_mutex_;
    mutable std::map<std::size_t, nlohmann::json> explanations_;
};

// HTTP JSON front end for a ReviewStore:
//   GET  /queue?page=&page_size=   GET /item/{id}   POST /item/{id}/decision
//   GET  /progress                 POST /finalize
class ReviewServer {
public:
    using FinalizeHook = std::function<nlohmann::json(const refinement::PseudoLabelSet&)>;

    ReviewServer(ReviewStore& store, std::size_t default_page_size, FinalizeHook on_finalize = {});
    ~ReviewServer();
    ReviewServer(const ReviewServer&) = delete;
    ReviewServer& operator=(const ReviewServer&) = delete;

    // Port 0 picks a free port; returns the bound port.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    void serve();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Host and port after applying FLOWGUARD_REVIEW_HOST / FLOWGUARD_REVIEW_PORT.
std::pair<std::string, int> review_endpoint(const std::string& host, int port);

} // namespace flowguard::pipeline
