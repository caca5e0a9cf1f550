#include "moport/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace moport {

namespace {

std::vector<double> midranks(const std::vector<double>& pooled_sorted) {
    const std::size_t n = pooled_sorted.size();
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled_sorted[j + 1] == pooled_sorted[i]) ++j;
        const double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[k] = r;
        i = j + 1;
    }
    return ranks;
}

/// Null distribution of the rank sum of the smaller sample over untied ranks
/// 1..n, by the classic shift algorithm: count[w] = number of m-subsets of
/// {1..n} with rank sum w.
double exact_two_sided_p(std::size_t m, std::size_t n_total, double w_obs) {
    const std::size_t w_max = (2 * n_total - m + 1) * m / 2;
    // dp[size][w] = number of size-subsets of the ranks seen so far summing
    // to w.
    std::vector<std::vector<double>> dp(m + 1, std::vector<double>(w_max + 1, 0.0));
    dp[0][0] = 1.0;
    for (std::size_t value = 1; value <= n_total; ++value) {
        for (std::size_t size = std::min(value, m); size >= 1; --size) {
            auto& row = dp[size];
            const auto& prev = dp[size - 1];
            for (std::size_t w = w_max; w >= value; --w) {
                row[w] += prev[w - value];
            }
        }
    }
    const auto& dist = dp[m];
    double total = 0.0;
    for (double c : dist) total += c;
    const std::size_t w_lo = m * (m + 1) / 2;
    double below = 0.0, above = 0.0;
    for (std::size_t w = w_lo; w <= w_max; ++w) {
        if (static_cast<double>(w) <= w_obs) below += dist[w];
        if (static_cast<double>(w) >= w_obs) above += dist[w];
    }
    return std::min(1.0, 2.0 * std::min(below, above) / total);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

} // namespace

Summary summarize(const MetricSample& sample, Direction direction) {
    if (sample.values.empty()) {
        throw std::invalid_argument("summarize: empty sample");
    }
    std::vector<double> v = sample.values;
    std::sort(v.begin(), v.end());
    Summary s;
    s.best = direction == Direction::LowerBetter ? v.front() : v.back();
    s.median = v[(v.size() - 1) / 2];
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(v.size()));
    return s;
}

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
    }
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;

    // Pool and rank; tag which sample each value came from.
    std::vector<std::pair<double, int>> pooled;
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, 0);
    for (double v : b) pooled.emplace_back(v, 1);
    std::sort(pooled.begin(), pooled.end());
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = pooled[i].first;
    const std::vector<double> ranks = midranks(values);

    bool has_ties = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (values[i] == values[i + 1]) {
            has_ties = true;
            break;
        }
    }

    double ra = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pooled[i].second == 0) ra += ranks[i];
    }

    WilcoxonResult result;
    result.rank_sum = ra;

    if (values.front() == values.back()) {
        // Every observation identical across both samples.
        result.p_two_sided = 1.0;
        return result;
    }

    if (!has_ties && std::min(na, nb) < 20) {
        const bool a_smaller = na <= nb;
        const std::size_t m = a_smaller ? na : nb;
        double w = ra;
        if (!a_smaller) {
            w = static_cast<double>(n * (n + 1)) / 2.0 - ra;
        }
        result.exact = true;
        result.p_two_sided = exact_two_sided_p(m, n, w);
        return result;
    }

    // Normal approximation with tie-corrected variance and continuity
    // correction.
    const double mu = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] == values[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double var = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                       (static_cast<double>(n + 1) -
                        tie_term / (static_cast<double>(n) * static_cast<double>(n - 1)));
    if (var <= 0.0) {
        result.p_two_sided = 1.0;
        return result;
    }
    const double diff = ra - mu;
    const double cc = diff > 0 ? -0.5 : (diff < 0 ? 0.5 : 0.0);
    const double z = (diff + cc) / std::sqrt(var);
    result.p_two_sided = std::clamp(2.0 * (1.0 - normal_cdf(std::abs(z))),
                                    std::numeric_limits<double>::min(), 1.0);
    return result;
}

std::vector<CellAnnotation> mark_winners(
    const std::vector<MetricSample>& grid,
    const std::vector<std::pair<std::string, Direction>>& metric_directions, double alpha) {
    std::map<std::string, Direction> directions(metric_directions.begin(),
                                                metric_directions.end());
    // Group cells by (dataset, metric), keeping input order of algorithms.
    std::map<std::pair<std::string, std::string>, std::vector<const MetricSample*>> cells;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& s : grid) {
        auto key = std::make_pair(s.dataset, s.metric);
        if (!cells.contains(key)) order.push_back(key);
        cells[key].push_back(&s);
    }

    std::vector<CellAnnotation> out;
    for (const auto& key : order) {
        const auto& entries = cells[key];
        const auto dir_it = directions.find(key.second);
        if (dir_it == directions.end()) {
            throw std::invalid_argument("mark_winners: no direction for metric " + key.second);
        }
        const Direction dir = dir_it->second;
        auto better = [dir](double x, double y) {
            return dir == Direction::LowerBetter ? x < y : x > y;
        };

        std::vector<double> medians(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            medians[i] = summarize(*entries[i], dir).median;
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (better(medians[i], medians[best])) best = i;
        }

        CellAnnotation ann;
        ann.dataset = key.first;
        ann.metric = key.second;
        ann.best_algorithm = entries[best]->algorithm;
        if (entries.size() > 1) {
            std::size_t second = best == 0 ? 1 : 0;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i == best) continue;
                if (better(medians[i], medians[second])) second = i;
            }
            ann.second_algorithm = entries[second]->algorithm;
            ann.p_best_vs_second =
                wilcoxon_rank_sum(entries[best]->values, entries[second]->values).p_two_sided;
            ann.significant = ann.p_best_vs_second < alpha;
        }
        out.push_back(std::move(ann));
    }
    return out;
}

} // namespace moport
