#include "moport/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moport {

namespace {

double nearest_euclidean(const ObjectivePoint& p, std::span<const ObjectivePoint> set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : set) {
        best = std::min(best, euclidean_distance(p, q));
    }
    return best;
}

} // namespace

FrontArchive nondominated_filter(std::span<const ObjectivePoint> points,
                                 std::string provenance) {
    FrontArchive archive;
    archive.provenance = std::move(provenance);
    std::vector<ObjectivePoint> sorted(points.begin(), points.end());
    // Descending return; among equal returns ascending risk, so the first of
    // each return group is the one that survives.
    std::sort(sorted.begin(), sorted.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
        if (a.ret != b.ret) return a.ret > b.ret;
        return a.risk < b.risk;
    });
    double best_risk = std::numeric_limits<double>::infinity();
    for (const auto& p : sorted) {
        if (p.risk < best_risk) {
            archive.points.push_back(p);
            best_risk = p.risk;
        }
    }
    return archive;
}

double gd(const FrontArchive& archive, std::span<const ObjectivePoint> frontier) {
    if (archive.points.empty() || frontier.empty()) {
        throw std::invalid_argument("gd: empty archive or frontier");
    }
    double sum = 0.0;
    for (const auto& p : archive.points) sum += nearest_euclidean(p, frontier);
    return sum / static_cast<double>(archive.points.size());
}

double igd(const FrontArchive& archive, std::span<const ObjectivePoint> frontier) {
    if (archive.points.empty() || frontier.empty()) {
        throw std::invalid_argument("igd: empty archive or frontier");
    }
    double sum = 0.0;
    for (const auto& p : frontier) sum += nearest_euclidean(p, archive.points);
    return sum / static_cast<double>(frontier.size());
}

std::optional<double> spacing(const FrontArchive& archive) {
    const std::size_t n = archive.points.size();
    if (n < 2) return std::nullopt;
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            d[i] = std::min(d[i], manhattan_distance(archive.points[i], archive.points[j]));
        }
    }
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : d) ss += (mean - v) * (mean - v);
    return std::sqrt(ss / static_cast<double>(n));
}

double maximum_spread(const FrontArchive& archive) {
    if (archive.points.empty()) {
        throw std::invalid_argument("maximum_spread: empty archive");
    }
    double ret_lo = archive.points.front().ret, ret_hi = ret_lo;
    double risk_lo = archive.points.front().risk, risk_hi = risk_lo;
    for (const auto& p : archive.points) {
        ret_lo = std::min(ret_lo, p.ret);
        ret_hi = std::max(ret_hi, p.ret);
        risk_lo = std::min(risk_lo, p.risk);
        risk_hi = std::max(risk_hi, p.risk);
    }
    return std::hypot(ret_hi - ret_lo, risk_hi - risk_lo);
}

std::optional<double> delta_spread(const FrontArchive& archive,
                                   std::span<const ObjectivePoint> frontier) {
    const std::size_t n = archive.points.size();
    if (n < 2 || frontier.empty()) return std::nullopt;

    std::vector<ObjectivePoint> sorted = archive.points;
    std::sort(sorted.begin(), sorted.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
        if (a.ret != b.ret) return a.ret < b.ret;
        return a.risk < b.risk;
    });

    ObjectivePoint front_lo = frontier[0], front_hi = frontier[0];
    for (const auto& p : frontier) {
        if (p.ret < front_lo.ret) front_lo = p;
        if (p.ret > front_hi.ret) front_hi = p;
    }
    const double d_f = euclidean_distance(front_lo, sorted.front());
    const double d_l = euclidean_distance(front_hi, sorted.back());

    std::vector<double> gaps(n - 1);
    double mean = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gaps[i] = euclidean_distance(sorted[i], sorted[i + 1]);
        mean += gaps[i];
    }
    mean /= static_cast<double>(n - 1);
    double dev = 0.0;
    for (double g : gaps) dev += std::abs(g - mean);

    const double denom = d_f + d_l + static_cast<double>(n - 1) * mean;
    if (denom == 0.0) return 0.0;
    return (d_f + d_l + dev) / denom;
}

double hypervolume(const FrontArchive& archive, const HvReference& ref) {
    // Contributing points, best (lowest) risk first among descending returns.
    std::vector<ObjectivePoint> pts;
    pts.reserve(archive.points.size());
    for (const auto& p : archive.points) {
        if (p.ret >= ref.ref.ret && p.risk <= ref.ref.risk) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
        if (a.ret != b.ret) return a.ret > b.ret;
        return a.risk < b.risk;
    });
    double area = 0.0;
    double risk_ceiling = ref.ref.risk;
    for (const auto& p : pts) {
        if (p.risk < risk_ceiling) {
            area += (p.ret - ref.ref.ret) * (risk_ceiling - p.risk);
            risk_ceiling = p.risk;
        }
    }
    return area;
}

MetricSet compute_metrics(const FrontArchive& archive, std::span<const ObjectivePoint> frontier,
                          const HvReference& ref) {
    MetricSet m;
    m.gd = gd(archive, frontier);
    m.spacing = spacing(archive);
    m.maximum_spread = maximum_spread(archive);
    m.delta_spread = delta_spread(archive, frontier);
    m.igd = igd(archive, frontier);
    m.hypervolume = hypervolume(archive, ref);
    return m;
}

} // namespace moport
