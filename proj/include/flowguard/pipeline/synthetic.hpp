#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace flowguard::pipeline {

struct SyntheticSpec {
    std::size_t train_rows = 20000;
    std::size_t test_rows = 6000;
    std::uint64_t seed = 7;
};

struct SyntheticSummary {
    std::map<std::string, std::size_t> train_counts; // raw label -> rows
    std::map<std::string, std::size_t> test_counts;
};

// Writes KDDTrain+.txt and KDDTest+.txt in the NSL-KDD text layout (41
// features, label, difficulty; no header). Traffic is simulated from
// per-attack profiles; the test file adds attack types the train file never
// contains, and R2L / U2R rows differ from normal traffic mainly in content
// features.
SyntheticSummary write_synthetic_nsl_kdd(const std::filesystem::path& dir, const SyntheticSpec& spec);

} // namespace flowguard::pipeline
