#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flowguard/core/matrix.hpp"

namespace flowguard::dataio {

enum class ColumnKind { Numeric, Categorical, Label, Drop };

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::Numeric;
    // Header text in the file when it differs from `name`. Several columns
    // may share one header text; they are matched in order of appearance.
    std::string header;

    const std::string& header_text() const noexcept { return header.empty() ? name : header; }
};

// Describes every column of a flow-record CSV. Exactly one column is the
// label; drop columns (ids, addresses, ports, timestamps) never reach the
// feature matrix.
struct FeatureSchema {
    std::vector<ColumnSpec> columns;
    std::set<std::string> benign_label_values;
    // Optional grouping of raw label values into reporting classes, e.g.
    // "neptune" -> "DoS". Unmapped values keep their raw name.
    std::map<std::string, std::string> category_map;
    bool has_header = true;

    void validate() const;
    std::size_t label_index() const;

    static FeatureSchema from_json(const nlohmann::json& doc);
    static FeatureSchema load(const std::filesystem::path& path);
    nlohmann::json to_json() const;
};

// A categorical column that has not been one-hot encoded yet.
struct CategoricalColumn {
    std::string name;
    std::vector<std::string> values;
};

// Cleaned, labelled feature matrix. labels[i] is 0 (benign) or 1 (attack);
// categories[i] is the reporting class of row i (e.g. "R2L", "SSH-Patator").
// row_ids are provenance tags: source row numbers for loaded data, negative
// values for synthetic rows.
struct FlowDataset {
    Matrix features;
    std::vector<std::string> feature_names;
    std::vector<CategoricalColumn> categorical;
    std::vector<int> labels;
    std::vector<std::string> categories;
    std::vector<std::int64_t> row_ids;
    // Rows whose cells failed to parse; clean() removes them as invalid.
    std::vector<std::uint8_t> parse_failed;
    std::string provenance;

    std::size_t rows() const noexcept { return features.rows(); }
    bool has_labels() const noexcept { return labels.size() == features.rows() && !labels.empty(); }

    // Throws DataError when shapes disagree.
    void check_consistent() const;

    FlowDataset subset(std::span<const std::size_t> indices) const;
    // Same rows, only the given feature columns (in the given order).
    FlowDataset select_features(std::span<const std::size_t> columns) const;
    FlowDataset with_label(int label) const;
    std::size_t count_label(int label) const;
    std::size_t feature_index(const std::string& name) const;
};

FlowDataset concat(const std::vector<FlowDataset>& parts);

struct CleaningReport {
    std::size_t input_rows = 0;
    std::size_t duplicates = 0;
    std::size_t missing = 0;
    std::size_t invalid = 0;
    std::size_t output_rows = 0;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

FlowDataset load_flow_csv(const std::filesystem::path& path, const FeatureSchema& schema);

// Removes rows with missing (empty / NaN) cells, invalid rows (Inf or
// unparsable), then exact duplicates (first occurrence kept).
std::pair<FlowDataset, CleaningReport> clean(const FlowDataset& ds);

// Lexicographically ordered categories per encoded column.
struct OneHotEncoding {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> categories;

    std::size_t width() const;
};

OneHotEncoding fit_one_hot(const FlowDataset& ds, const std::vector<std::string>& cols);
// Unseen categories encode as all-zero indicators and log a warning.
FlowDataset apply_one_hot(const FlowDataset& ds, const OneHotEncoding& encoding);
FlowDataset one_hot(const FlowDataset& ds, const std::vector<std::string>& cols);

struct ScalerParams {
    std::vector<double> min;
    std::vector<double> max;

    bool operator==(const ScalerParams&) const = default;
};

ScalerParams fit_minmax(const FlowDataset& ds);
// Maps into [0, 1], clamping out-of-range values; constant features map to 0.
FlowDataset apply_minmax(const FlowDataset& ds, const ScalerParams& params);
void apply_minmax_inplace(Matrix& m, const ScalerParams& params);

enum class StratifyBy { Label, Category };

// First part receives `fraction` of every stratum (largest-remainder
// allocation of n - ceil((1 - fraction) * n) rows); both parts keep source
// row order.
std::pair<FlowDataset, FlowDataset> stratified_split(const FlowDataset& ds, double fraction, std::uint64_t seed,
                                                     StratifyBy by = StratifyBy::Label);

// Writes features, label, category and row id as CSV with a header; doubles
// use round-trip precision so re-reading is exact.
void write_dataset_csv(const FlowDataset& ds, const std::filesystem::path& path);
FlowDataset read_dataset_csv(const std::filesystem::path& path);

} // namespace flowguard::dataio
