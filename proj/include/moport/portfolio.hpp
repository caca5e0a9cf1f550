#pragma once

#include <limits>
#include <optional>
#include <stdexcept>

#include "moport/dataset.hpp"
#include "moport/rng.hpp"
#include "moport/types.hpp"

namespace moport {

/// Portfolio return r' w.
template <typename DerivedW, typename DerivedR>
typename DerivedW::Scalar portfolio_return(const Eigen::MatrixBase<DerivedW>& w,
                                           const Eigen::MatrixBase<DerivedR>& r) {
    return r.derived().dot(w.derived());
}

/// Portfolio risk w' Sigma w (a variance, non-negative for PSD Sigma).
template <typename DerivedW, typename DerivedS>
typename DerivedW::Scalar portfolio_risk(const Eigen::MatrixBase<DerivedW>& w,
                                         const Eigen::MatrixBase<DerivedS>& sigma) {
    return w.derived().dot(sigma.derived() * w.derived());
}

template <typename Derived>
ObjectivePointT<typename Derived::Scalar> evaluate(const Eigen::MatrixBase<Derived>& weights,
                                                   const AssetUniverse& universe) {
    if (weights.size() != universe.n) {
        throw std::invalid_argument("evaluate: weight vector has " +
                                    std::to_string(weights.size()) + " entries, universe has " +
                                    std::to_string(universe.n));
    }
    return {portfolio_return(weights, universe.mean_returns),
            portfolio_risk(weights, universe.covariance)};
}

/// Clips negative entries to zero, then rescales to unit sum. Returns nullopt
/// when everything clips to zero (sum s = 0); the algorithm layer substitutes
/// the uniform portfolio in that case.
///
/// The rescale is skipped when the clipped sum is already 1 within a few ulps
/// of accumulated rounding, which makes repair exactly idempotent.
template <typename Derived>
std::optional<VectorT<typename Derived::Scalar>> repair(const Eigen::MatrixBase<Derived>& weights) {
    using Scalar = typename Derived::Scalar;
    VectorT<Scalar> w = weights.derived().cwiseMax(Scalar(0));
    const Scalar s = w.sum();
    if (!(s > Scalar(0))) {
        return std::nullopt;
    }
    const Scalar slack = Scalar(32) * std::numeric_limits<Scalar>::epsilon() *
                         static_cast<Scalar>(std::max<Eigen::Index>(w.size(), 1));
    if (std::abs(s - Scalar(1)) > slack) {
        w /= s;
    }
    return w;
}

inline Vector uniform_weights(Index n) {
    return Vector::Constant(n, 1.0 / static_cast<double>(n));
}

template <typename Derived>
Vector repair_or_uniform(const Eigen::MatrixBase<Derived>& weights) {
    auto r = repair(weights);
    return r ? *r : uniform_weights(weights.size());
}

/// An invest-ratio vector on the unit simplex with its cached objectives.
/// Treated as immutable once built; updates replace the whole value.
struct PortfolioSolution {
    Vector weights;
    ObjectivePoint objectives;
};

inline PortfolioSolution make_solution(Vector weights, const AssetUniverse& universe) {
    ObjectivePoint f = evaluate(weights, universe);
    return {std::move(weights), f};
}

/// Uniform(0,1) genes followed by repair. The all-zero draw has probability
/// zero; the retry loop exists only for completeness.
inline Vector random_weights(Index n, Rng& rng) {
    for (;;) {
        Vector u(n);
        for (Index i = 0; i < n; ++i) u[i] = rng.uniform01();
        if (auto w = repair(u)) {
            return *w;
        }
    }
}

inline PortfolioSolution random_solution(Index n, const AssetUniverse& universe, Rng& rng) {
    return make_solution(random_weights(n, rng), universe);
}

} // namespace moport
