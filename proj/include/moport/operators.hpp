#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "moport/types.hpp"

namespace moport {

/// Levy-flight mutation parameters: step scale alpha0 and stability index
/// beta in [0.3, 1.99]. Smaller beta gives heavier tails.
struct LevyParams {
    double alpha0 = 1e-5;
    double beta = 0.3;
};

/// Shared knobs for the difference/crossover operators. Which fields matter
/// depends on the pipeline: F and CR drive the DE form, C the uniform/normal
/// scaled forms, eta_c/CR the SBX form, eta_m/p_mut polynomial mutation.
struct OperatorConfig {
    double F = 1.3;
    double CR = 1.0;
    double C = 1.0;
    double eta_c = 20.0;
    double eta_m = 20.0;
    double p_mut = 0.0;
};

/// Gaussian scale for the numerator of Mantegna's stable sampler.
inline double mantegna_sigma_u(double beta) {
    const double num = std::tgamma(1.0 + beta) * std::sin(M_PI * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

/// One draw from the symmetric stable distribution via Mantegna's method:
/// u / |v|^(1/beta) with u ~ N(0, sigma_u^2), v ~ N(0, 1). A zero v (never
/// seen in practice) is resampled.
template <typename Rng>
double mantegna_sample(double beta, Rng& rng) {
    if (!(beta >= 0.3 && beta <= 1.99)) {
        throw std::invalid_argument("mantegna_sample: beta outside [0.3, 1.99]");
    }
    const double sigma_u = mantegna_sigma_u(beta);
    const double u = rng.normal01() * sigma_u;
    double v = rng.normal01();
    while (v == 0.0) v = rng.normal01();
    return u / std::pow(std::abs(v), 1.0 / beta);
}

/// y = xi + alpha0 * (xi - xj) (.*) L, with L supplied gene by gene. The
/// output is raw; feasibility is restored later by repair.
template <typename DerivedA, typename DerivedB, typename StepGen>
Vector levy_mutation_with(const Eigen::MatrixBase<DerivedA>& xi,
                          const Eigen::MatrixBase<DerivedB>& xj, double alpha0,
                          StepGen&& step) {
    Vector y(xi.size());
    for (Index d = 0; d < xi.size(); ++d) {
        y[d] = xi[d] + alpha0 * (xi[d] - xj[d]) * step();
    }
    return y;
}

template <typename DerivedA, typename DerivedB, typename Rng>
Vector levy_mutation(const Eigen::MatrixBase<DerivedA>& xi, const Eigen::MatrixBase<DerivedB>& xj,
                     const LevyParams& params, Rng& rng) {
    return levy_mutation_with(xi, xj, params.alpha0,
                              [&] { return mantegna_sample(params.beta, rng); });
}

/// y = xi + F * (xj - xk) when rand < CR, else xi; one draw gates the whole
/// vector.
template <typename DerivedA, typename DerivedB, typename DerivedC, typename Rng>
Vector de_mutation(const Eigen::MatrixBase<DerivedA>& xi, const Eigen::MatrixBase<DerivedB>& xj,
                   const Eigen::MatrixBase<DerivedC>& xk, double F, double CR, Rng& rng) {
    if (rng.uniform01() < CR) {
        return xi.derived() + F * (xj.derived() - xk.derived());
    }
    return xi.derived();
}

enum class DiffDist { Uniform, Normal };

/// y_d = xi_d + C * (xj_d - xk_d) * s_d with s_d ~ Unif(-1,1) or N(0,1).
template <typename DerivedA, typename DerivedB, typename DerivedC, typename Rng>
Vector scaled_diff_mutation(const Eigen::MatrixBase<DerivedA>& xi,
                            const Eigen::MatrixBase<DerivedB>& xj,
                            const Eigen::MatrixBase<DerivedC>& xk, double C, DiffDist dist,
                            Rng& rng) {
    Vector y(xi.size());
    for (Index d = 0; d < xi.size(); ++d) {
        const double s = dist == DiffDist::Uniform ? rng.uniform(-1.0, 1.0) : rng.normal01();
        y[d] = xi[d] + C * (xj[d] - xk[d]) * s;
    }
    return y;
}

/// Bounded polynomial mutation on [0, 1] with distribution index eta_m; each
/// gene mutates independently with probability p_mut.
template <typename Derived, typename Rng>
Vector polynomial_mutation(const Eigen::MatrixBase<Derived>& x, double p_mut, double eta_m,
                           Rng& rng) {
    Vector y = x.derived();
    for (Index d = 0; d < y.size(); ++d) {
        if (rng.uniform01() >= p_mut) continue;
        const double v = y[d];
        const double u = rng.uniform01();
        double dq;
        if (u <= 0.5) {
            const double delta1 = v;
            dq = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - delta1, eta_m + 1.0),
                          1.0 / (eta_m + 1.0)) -
                 1.0;
        } else {
            const double delta2 = 1.0 - v;
            dq = 1.0 - std::pow(2.0 * (1.0 - u) +
                                    2.0 * (u - 0.5) * std::pow(1.0 - delta2, eta_m + 1.0),
                                1.0 / (eta_m + 1.0));
        }
        y[d] = std::clamp(v + dq, 0.0, 1.0);
    }
    return y;
}

/// Simulated binary crossover; each gene pair crosses with probability pc,
/// children are clamped to [0, 1] afterwards. Before clamping the children
/// average to the parents exactly.
template <typename DerivedA, typename DerivedB, typename Rng>
std::pair<Vector, Vector> sbx_crossover(const Eigen::MatrixBase<DerivedA>& p1,
                                        const Eigen::MatrixBase<DerivedB>& p2, double pc,
                                        double eta_c, Rng& rng) {
    Vector c1 = p1.derived();
    Vector c2 = p2.derived();
    for (Index d = 0; d < c1.size(); ++d) {
        if (rng.uniform01() >= pc) continue;
        const double u = rng.uniform01();
        const double bq = u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta_c + 1.0))
                                   : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
        const double mid = 0.5 * (p1[d] + p2[d]);
        const double spread = 0.5 * bq * (p2[d] - p1[d]);
        c1[d] = std::clamp(mid - spread, 0.0, 1.0);
        c2[d] = std::clamp(mid + spread, 0.0, 1.0);
    }
    return {std::move(c1), std::move(c2)};
}

/// Mating pool draws. curr_plus_random keeps the visited individual as the
/// base parent; three_random adds a distinct differential pair that may
/// coincide with the base.
template <typename Rng>
std::pair<int, int> select_curr_plus_random(int current, const std::vector<int>& pool, Rng& rng) {
    if (pool.empty()) throw std::invalid_argument("select_parents: empty pool");
    return {current, pool[static_cast<std::size_t>(rng.below(pool.size()))]};
}

template <typename Rng>
std::tuple<int, int, int> select_three_random(int current, const std::vector<int>& pool,
                                              Rng& rng) {
    if (pool.size() < 2) {
        throw std::invalid_argument("select_parents: pool too small for a distinct pair");
    }
    const int j = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    int k = j;
    while (k == j) k = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    return {current, j, k};
}

/// Two distinct pool members (both parents random, for the GA pipeline); a
/// single-member pool degenerates to mating the member with itself.
template <typename Rng>
std::pair<int, int> select_two_random(const std::vector<int>& pool, Rng& rng) {
    if (pool.empty()) throw std::invalid_argument("select_parents: empty pool");
    const int j = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    if (pool.size() == 1) return {j, j};
    int k = j;
    while (k == j) k = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    return {j, k};
}

} // namespace moport
