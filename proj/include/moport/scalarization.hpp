#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "moport/types.hpp"

namespace moport {

/// Classic Tchebycheff value max_m lambda_m |f_m - z_m| on points already in
/// minimization orientation.
template <typename Scalar>
Scalar tchebycheff_min_space(const Eigen::Matrix<Scalar, 2, 1>& f,
                             const Eigen::Matrix<Scalar, 2, 1>& lambda,
                             const Eigen::Matrix<Scalar, 2, 1>& z_star) {
    return std::max(lambda[0] * std::abs(f[0] - z_star[0]),
                    lambda[1] * std::abs(f[1] - z_star[1]));
}

/// Boundary-intersection Tchebycheff value max_m lambda_m (f_m - r_m); the
/// difference is signed, so points beyond the reference on both objectives
/// score negative.
template <typename Scalar>
Scalar nbi_tchebycheff_min_space(const Eigen::Matrix<Scalar, 2, 1>& f,
                                 const Eigen::Matrix<Scalar, 2, 1>& lambda,
                                 const Eigen::Matrix<Scalar, 2, 1>& r) {
    return std::max(lambda[0] * (f[0] - r[0]), lambda[1] * (f[1] - r[1]));
}

/// Canonical-orientation entry points: return is negated on the way in so the
/// formulas above apply literally.
template <typename Scalar>
Scalar tchebycheff(const ObjectivePointT<Scalar>& f, const Eigen::Matrix<Scalar, 2, 1>& lambda,
                   const ObjectivePointT<Scalar>& z_star) {
    return tchebycheff_min_space(min_coords(f), lambda, min_coords(z_star));
}

/// Normal vector of the segment between extreme points F1, F2 (minimization
/// coordinates): lambda = (|F2_2 - F1_2|, |F2_1 - F1_1|).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> chim_normal(const Eigen::Matrix<Scalar, 2, 1>& f1,
                                        const Eigen::Matrix<Scalar, 2, 1>& f2) {
    return {std::abs(f2[1] - f1[1]), std::abs(f2[0] - f1[0])};
}

/// N evenly spaced reference points r_i = a_i F1 + (1 - a_i) F2 with
/// a_i = (N - i) / (N - 1), i = 1..N, so r_1 = F1 and r_N = F2.
template <typename Scalar>
std::vector<Eigen::Matrix<Scalar, 2, 1>> make_reference_points(
    const Eigen::Matrix<Scalar, 2, 1>& f1, const Eigen::Matrix<Scalar, 2, 1>& f2, Index n) {
    if (n < 2) {
        throw std::invalid_argument("make_reference_points: need at least 2 subproblems");
    }
    std::vector<Eigen::Matrix<Scalar, 2, 1>> refs(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) {
        const Scalar a = static_cast<Scalar>(n - i) / static_cast<Scalar>(n - 1);
        refs[static_cast<std::size_t>(i - 1)] = a * f1 + (Scalar(1) - a) * f2;
    }
    return refs;
}

/// Evenly spaced classic weight pairs with lambda_1 + lambda_2 = 1.
template <typename Scalar>
std::vector<Eigen::Matrix<Scalar, 2, 1>> evenly_spaced_weights(Index n) {
    if (n < 2) {
        throw std::invalid_argument("evenly_spaced_weights: need at least 2 subproblems");
    }
    std::vector<Eigen::Matrix<Scalar, 2, 1>> w(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const Scalar a = static_cast<Scalar>(i) / static_cast<Scalar>(n - 1);
        w[static_cast<std::size_t>(i)] = {a, Scalar(1) - a};
    }
    return w;
}

/// For each point, the indices of the T nearest points (Euclidean), self
/// included, ties broken by lower index.
template <typename Scalar>
std::vector<std::vector<int>> nearest_neighbor_table(
    const std::vector<Eigen::Matrix<Scalar, 2, 1>>& points, int t) {
    const int n = static_cast<int>(points.size());
    if (t > n) {
        throw std::invalid_argument("nearest_neighbor_table: T exceeds point count");
    }
    std::vector<std::vector<int>> table(points.size());
    std::vector<std::pair<Scalar, int>> dist(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            dist[static_cast<std::size_t>(j)] = {(points[i] - points[j]).norm(), j};
        }
        std::sort(dist.begin(), dist.end());
        auto& row = table[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(t));
        for (int k = 0; k < t; ++k) row[static_cast<std::size_t>(k)] = dist[k].second;
    }
    return table;
}

/// Per-run scalarization state shared by all decomposition variants: the
/// extreme points and derived normal vector / reference points / neighborhoods
/// for the boundary-intersection form, plus evenly spaced weights and the
/// ideal point for the classic form.
class ScalarizationContext {
public:
    ScalarizationContext(Index pop_size, int neighborhood_size)
        : n_(pop_size), t_(neighborhood_size) {
        if (pop_size < 2) {
            throw std::invalid_argument("ScalarizationContext: population size must be >= 2");
        }
        if (neighborhood_size < 1 || neighborhood_size > pop_size) {
            throw std::invalid_argument("ScalarizationContext: T must be in [1, N]");
        }
        classic_weights_ = evenly_spaced_weights<double>(n_);
    }

    /// Seeds extremes from a population's objective values: F1 is the best
    /// return seen, F2 the lowest risk seen. The ideal point starts at the
    /// componentwise minimum.
    void initialize(const std::vector<ObjectivePoint>& objectives) {
        if (objectives.empty()) {
            throw std::invalid_argument("ScalarizationContext: empty initial population");
        }
        f1_ = f2_ = ideal_ = min_coords(objectives.front());
        for (const auto& f : objectives) {
            const Vector2 m = min_coords(f);
            if (m[0] < f1_[0]) f1_ = m;
            if (m[1] < f2_[1]) f2_ = m;
            ideal_ = ideal_.cwiseMin(m);
        }
        rebuild();
        initialized_ = true;
    }

    /// Tracks best-seen extremes; recomputes lambda, the reference points and
    /// the neighborhoods immediately when an extreme moves. Returns whether
    /// anything changed.
    bool update_extremes(const ObjectivePoint& f) {
        const Vector2 m = min_coords(f);
        bool changed = false;
        if (m[0] < f1_[0]) {
            f1_ = m;
            changed = true;
        }
        if (m[1] < f2_[1]) {
            f2_ = m;
            changed = true;
        }
        ideal_ = ideal_.cwiseMin(m);
        if (changed) rebuild();
        return changed;
    }

    double nbi_value(const ObjectivePoint& f, int subproblem) const {
        return nbi_tchebycheff_min_space(min_coords(f), lambda_,
                                         refs_[static_cast<std::size_t>(subproblem)]);
    }

    double classic_value(const ObjectivePoint& f, int subproblem) const {
        return tchebycheff_min_space(min_coords(f),
                                     classic_weights_[static_cast<std::size_t>(subproblem)],
                                     ideal_);
    }

    bool degenerate() const { return lambda_[0] == 0.0 && lambda_[1] == 0.0; }
    bool initialized() const { return initialized_; }

    Index pop_size() const { return n_; }
    int neighborhood_size() const { return t_; }
    const Vector2& normal_vector() const { return lambda_; }
    const Vector2& extreme_best_return() const { return f1_; }
    const Vector2& extreme_best_risk() const { return f2_; }
    const Vector2& ideal_point() const { return ideal_; }
    const std::vector<Vector2>& reference_points() const { return refs_; }
    const std::vector<Vector2>& classic_weights() const { return classic_weights_; }
    const std::vector<std::vector<int>>& neighborhoods() const { return neighborhoods_; }
    const std::vector<int>& neighborhood(int i) const {
        return neighborhoods_[static_cast<std::size_t>(i)];
    }

private:
    void rebuild() {
        lambda_ = chim_normal(f1_, f2_);
        refs_ = make_reference_points(f1_, f2_, n_);
        neighborhoods_ = nearest_neighbor_table(refs_, t_);
    }

    Index n_;
    int t_;
    bool initialized_ = false;
    Vector2 f1_ = Vector2::Zero();
    Vector2 f2_ = Vector2::Zero();
    Vector2 ideal_ = Vector2::Zero();
    Vector2 lambda_ = Vector2::Zero();
    std::vector<Vector2> refs_;
    std::vector<Vector2> classic_weights_;
    std::vector<std::vector<int>> neighborhoods_;
};

} // namespace moport
