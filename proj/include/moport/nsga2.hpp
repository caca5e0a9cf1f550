#pragma once

#include <span>
#include <vector>

#include "moport/types.hpp"

namespace moport {

/// Fast non-dominated sorting under (maximize return, minimize risk).
/// Returns fronts of indices, best front first.
std::vector<std::vector<int>> fast_nondominated_sort(std::span<const ObjectivePoint> points);

/// Per-index rank (front number, 0 = non-dominated).
std::vector<int> domination_ranks(std::span<const ObjectivePoint> points);

/// Crowding distance within one front; boundary points get +infinity, the
/// rest the usual normalized neighbor-gap sum.
std::vector<double> crowding_distance(std::span<const ObjectivePoint> points,
                                      const std::vector<int>& front);

} // namespace moport
