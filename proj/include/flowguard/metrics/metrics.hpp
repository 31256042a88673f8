#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace flowguard::metrics {

// Attack (label 1) is the positive class.
struct ConfusionMatrix {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

    std::size_t total() const noexcept { return tp + fp + fn + tn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(std::span<const int> preds, std::span<const int> truth);

// A ratio whose denominator may be zero. Undefined ratios report 0 and
// carry defined = false so batch reports keep going.
struct Metric {
    double value = 0.0;
    bool defined = true;

    operator double() const noexcept { return value; }
};

Metric precision(const ConfusionMatrix& cm);
Metric recall(const ConfusionMatrix& cm);
Metric f1(const ConfusionMatrix& cm);
Metric accuracy(const ConfusionMatrix& cm);
Metric fpr(const ConfusionMatrix& cm);

// Probability that a random attack outscores a random benign row, ties
// counted one half (Mann-Whitney U with average ranks).
double roc_auc(std::span<const double> scores, std::span<const int> truth);

struct Summary {
    ConfusionMatrix cm;
    Metric accuracy, precision, recall, f1, fpr;
    double roc_auc = 0.0;
    bool roc_auc_defined = false;

    nlohmann::json to_json() const;
};

// scores may be empty, in which case ROC-AUC is left undefined.
Summary summarize(std::span<const int> preds, std::span<const int> truth, std::span<const double> scores = {});

struct ClassRate {
    std::string name;
    std::size_t rows = 0;
    std::size_t correct = 0;
    double rate = 0.0;
};

// Per reporting class, the fraction of its rows whose binary prediction
// equals the binary truth. Rows are ordered by class name.
struct ClassRateTable {
    std::vector<ClassRate> classes;

    const ClassRate* find(const std::string& name) const;
};

ClassRateTable class_rates(std::span<const int> preds, std::span<const int> truth,
                           std::span<const std::string> categories);

// Tables of the form "model | accuracy | precision | recall | F1 | ROC-AUC | FPR", in percent.
struct MetricsTable {
    std::vector<std::pair<std::string, Summary>> rows;

    void add(std::string model, Summary s) { rows.emplace_back(std::move(model), std::move(s)); }
    std::string to_csv() const;
    std::string to_text(const std::string& title) const;
};

// Columns: class, then one rate column per stage (percent).
std::string class_rates_csv(const std::vector<std::pair<std::string, ClassRateTable>>& stages);

} // namespace flowguard::metrics
