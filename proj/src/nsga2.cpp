#include "moport/nsga2.hpp"

#include <algorithm>
#include <limits>

namespace moport {

std::vector<std::vector<int>> fast_nondominated_sort(std::span<const ObjectivePoint> points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated_by(points.size());
    std::vector<int> domination_count(points.size(), 0);
    std::vector<std::vector<int>> fronts(1);

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            if (dominates(points[p], points[q])) {
                dominated_by[static_cast<std::size_t>(p)].push_back(q);
            } else if (dominates(points[q], points[p])) {
                ++domination_count[static_cast<std::size_t>(p)];
            }
        }
        if (domination_count[static_cast<std::size_t>(p)] == 0) {
            fronts[0].push_back(p);
        }
    }

    std::size_t f = 0;
    while (!fronts[f].empty()) {
        std::vector<int> next;
        for (int p : fronts[f]) {
            for (int q : dominated_by[static_cast<std::size_t>(p)]) {
                if (--domination_count[static_cast<std::size_t>(q)] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(next));
        ++f;
    }
    fronts.pop_back();
    return fronts;
}

std::vector<int> domination_ranks(std::span<const ObjectivePoint> points) {
    std::vector<int> ranks(points.size(), 0);
    const auto fronts = fast_nondominated_sort(points);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (int i : fronts[f]) ranks[static_cast<std::size_t>(i)] = static_cast<int>(f);
    }
    return ranks;
}

std::vector<double> crowding_distance(std::span<const ObjectivePoint> points,
                                      const std::vector<int>& front) {
    const std::size_t m = front.size();
    std::vector<double> crowd(m, 0.0);
    if (m <= 2) {
        std::fill(crowd.begin(), crowd.end(), std::numeric_limits<double>::infinity());
        return crowd;
    }
    // positions[k] = index into `front`/`crowd` of the k-th member.
    std::vector<std::size_t> order(m);
    auto accumulate = [&](auto key) {
        for (std::size_t k = 0; k < m; ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double ka = key(points[static_cast<std::size_t>(front[a])]);
            const double kb = key(points[static_cast<std::size_t>(front[b])]);
            if (ka != kb) return ka < kb;
            return front[a] < front[b];
        });
        const double lo = key(points[static_cast<std::size_t>(front[order.front()])]);
        const double hi = key(points[static_cast<std::size_t>(front[order.back()])]);
        crowd[order.front()] = std::numeric_limits<double>::infinity();
        crowd[order.back()] = std::numeric_limits<double>::infinity();
        if (hi == lo) return;
        for (std::size_t k = 1; k + 1 < m; ++k) {
            const double prev = key(points[static_cast<std::size_t>(front[order[k - 1]])]);
            const double next = key(points[static_cast<std::size_t>(front[order[k + 1]])]);
            crowd[order[k]] += (next - prev) / (hi - lo);
        }
    };
    accumulate([](const ObjectivePoint& p) { return p.ret; });
    accumulate([](const ObjectivePoint& p) { return p.risk; });
    return crowd;
}

} // namespace moport
