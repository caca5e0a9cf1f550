#pragma once

#include <string>
#include <vector>

namespace moport {

/// One metric's values for one (algorithm, dataset) cell across repetitions.
struct MetricSample {
    std::string algorithm;
    std::string dataset;
    std::string metric;
    std::vector<double> values;
};

enum class Direction { LowerBetter, HigherBetter };

struct Summary {
    double best = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
};

/// best = extreme per direction; median = exact middle order statistic (lower
/// middle for even counts, no interpolation); std = population standard
/// deviation (divisor n).
Summary summarize(const MetricSample& sample, Direction direction);

struct WilcoxonResult {
    double rank_sum = 0.0; // rank sum of the first sample, midranks for ties
    double p_two_sided = 1.0;
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum test. Exact null enumeration (shift algorithm)
/// when both samples are untied and the smaller has fewer than 20 values;
/// otherwise the normal approximation with midranks, tie-corrected variance
/// and continuity correction. Fully tied inputs give p = 1.
WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

struct CellAnnotation {
    std::string dataset;
    std::string metric;
    std::string best_algorithm;
    std::string second_algorithm;
    double p_best_vs_second = 1.0;
    bool significant = false;
};

/// Flags the best-median algorithm per (dataset, metric) cell and marks it
/// significant when the Wilcoxon test against the second-best median rejects
/// at level alpha. Median ties break toward the earlier algorithm in input
/// order.
std::vector<CellAnnotation> mark_winners(const std::vector<MetricSample>& grid,
                                         const std::vector<std::pair<std::string, Direction>>&
                                             metric_directions,
                                         double alpha);

} // namespace moport
