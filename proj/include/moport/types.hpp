#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace moport {

template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorT<double>;
using Matrix = MatrixT<double>;
using Vector2 = Eigen::Vector2d;
using Index = Eigen::Index;

/// A point in objective space: return is maximized, risk (variance) is
/// minimized. This canonical orientation is kept everywhere outside the
/// scalarizers; consumers that need a pure-minimization view convert
/// explicitly via min_coords().
template <typename Scalar>
struct ObjectivePointT {
    Scalar ret{};
    Scalar risk{};

    friend bool operator==(const ObjectivePointT& a, const ObjectivePointT& b) = default;
};

using ObjectivePoint = ObjectivePointT<double>;

/// Both objectives mapped to minimization orientation: (-return, risk).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> min_coords(const ObjectivePointT<Scalar>& f) {
    return {-f.ret, f.risk};
}

template <typename Scalar>
ObjectivePointT<Scalar> from_min_coords(const Eigen::Matrix<Scalar, 2, 1>& m) {
    return {-m[0], m[1]};
}

template <typename Scalar>
bool is_finite(const ObjectivePointT<Scalar>& f) {
    return std::isfinite(f.ret) && std::isfinite(f.risk);
}

/// Pareto dominance under (maximize return, minimize risk).
template <typename Scalar>
bool dominates(const ObjectivePointT<Scalar>& a, const ObjectivePointT<Scalar>& b) {
    return a.ret >= b.ret && a.risk <= b.risk && (a.ret > b.ret || a.risk < b.risk);
}

template <typename Scalar>
Scalar euclidean_distance(const ObjectivePointT<Scalar>& a, const ObjectivePointT<Scalar>& b) {
    return std::hypot(a.ret - b.ret, a.risk - b.risk);
}

template <typename Scalar>
Scalar manhattan_distance(const ObjectivePointT<Scalar>& a, const ObjectivePointT<Scalar>& b) {
    return std::abs(a.ret - b.ret) + std::abs(a.risk - b.risk);
}

} // namespace moport
