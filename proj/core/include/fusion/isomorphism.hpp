#pragma once

#include <optional>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

struct IsoOptions {
  long long node_budget = 10'000'000;
};

// Basis bijection sigma with sigma(0) = 0, sigma . dual = dual . sigma and
// N_b(sigma i, sigma j, sigma k) = N_a(i, j, k), or nullopt when none
// exists.  Backtracking over invariant classes (dimension, order,
// self-duality, invertibility); deterministic; throws budget_error when
// the node budget runs out.
std::optional<std::vector<int>> are_isomorphic(const FusionRing& a, const FusionRing& b,
                                               const IsoOptions& opts = {});

}  // namespace fusion
