#pragma once

#include <utility>
#include <vector>

namespace mrcov {

// Exact minimum-cost perfect pairing of an even-sized point set given a
// symmetric distance matrix. Subset DP up to 20 points, blossom matching
// beyond that. Pairs come back as (i, j) with i < j, sorted by i.
std::vector<std::pair<int, int>> min_cost_pairing(
    const std::vector<std::vector<double>>& dist);

}  // namespace mrcov
