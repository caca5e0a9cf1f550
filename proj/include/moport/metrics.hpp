#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moport/types.hpp"

namespace moport {

/// A non-dominated set of objective points under (maximize return, minimize
/// risk), with a provenance tag for bookkeeping.
struct FrontArchive {
    std::vector<ObjectivePoint> points;
    std::string provenance;
};

/// Reference point for hypervolume: the dominated corner (low return, high
/// risk). A front point contributes area only where it has return >= ref.ret
/// and risk <= ref.risk.
struct HvReference {
    ObjectivePoint ref;
};

/// Maximal non-dominated subset; exact duplicates collapse to one
/// representative. Output is sorted by descending return.
FrontArchive nondominated_filter(std::span<const ObjectivePoint> points,
                                 std::string provenance = {});

/// Mean Euclidean distance from each archive point to its nearest frontier
/// point.
double gd(const FrontArchive& archive, std::span<const ObjectivePoint> frontier);

/// Mean Euclidean distance from each frontier point to its nearest archive
/// point.
double igd(const FrontArchive& archive, std::span<const ObjectivePoint> frontier);

/// Spread uniformity: sqrt(mean (dbar - d_i)^2) where d_i is the minimum
/// Manhattan distance from point i to any other archive point. Undefined for
/// fewer than two points.
std::optional<double> spacing(const FrontArchive& archive);

/// Diagonal of the archive's objective-space bounding box.
double maximum_spread(const FrontArchive& archive);

/// Distribution-plus-extent spread: consecutive Euclidean gaps along the
/// return-sorted archive, plus the distances from the frontier's extreme
/// points to the archive's boundary solutions. Undefined for fewer than two
/// archive points.
std::optional<double> delta_spread(const FrontArchive& archive,
                                   std::span<const ObjectivePoint> frontier);

/// Area of the union of rectangles spanned by each contributing point and the
/// reference corner, by sweep over return-sorted points.
double hypervolume(const FrontArchive& archive, const HvReference& ref);

struct MetricSet {
    double gd = 0.0;
    std::optional<double> spacing;
    double maximum_spread = 0.0;
    std::optional<double> delta_spread;
    double igd = 0.0;
    double hypervolume = 0.0;
};

MetricSet compute_metrics(const FrontArchive& archive, std::span<const ObjectivePoint> frontier,
                          const HvReference& ref);

} // namespace moport
