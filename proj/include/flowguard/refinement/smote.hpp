#pragma once

#include <cstdint>

#include "flowguard/dataio/dataset.hpp"

namespace flowguard::refinement {

// Oversamples the minority class to the majority count. Original rows come
// first, unchanged; synthetic rows follow with row_ids -1, -2, ... and the
// category of their parent. Each synthetic row is x + u * (nn - x), with x a
// uniformly drawn minority row, nn one of its k nearest minority neighbours
// and u uniform in [0, 1). k is lowered to minority - 1 when needed.
dataio::FlowDataset smote(const dataio::FlowDataset& ds, std::size_t k, std::uint64_t seed);

} // namespace flowguard::refinement
