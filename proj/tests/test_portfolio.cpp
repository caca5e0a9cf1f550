#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "moport/portfolio.hpp"

using namespace moport;

namespace {

AssetUniverse tiny_universe() {
    std::istringstream in("2\n0.1 0.2\n0.2 0.1\n1 1 1.0\n1 2 0.5\n2 2 1.0");
    return parse_universe(in);
}

} // namespace

TEST_CASE("evaluate: basis vectors recover per-asset return and variance") {
    const auto u = tiny_universe();
    for (Index k = 0; k < u.n; ++k) {
        Vector w = Vector::Zero(u.n);
        w[k] = 1.0;
        const auto f = evaluate(w, u);
        CHECK(f.ret == doctest::Approx(u.mean_returns[k]));
        CHECK(f.risk == doctest::Approx(u.covariance(k, k)));
    }
}

TEST_CASE("evaluate: worked two-asset example") {
    std::istringstream in("2\n0.1 0.2\n0.2 0.1\n1 1 1.0\n1 2 0.5\n2 2 1.0");
    auto u = parse_universe(in);
    // covariance [[0.04, 0.01], [0.01, 0.01]]
    Vector w(2);
    w << 0.5, 0.5;
    const auto f = evaluate(w, u);
    CHECK(f.ret == doctest::Approx(0.15));
    CHECK(f.risk == doctest::Approx(0.0175));
}

TEST_CASE("evaluate: zero covariance annihilates risk") {
    auto u = tiny_universe();
    u.covariance.setZero();
    Vector w(2);
    w << 0.3, 0.7;
    CHECK(evaluate(w, u).risk == 0.0);
}

TEST_CASE("evaluate: dimension mismatch throws") {
    const auto u = tiny_universe();
    Vector w = Vector::Constant(3, 1.0 / 3.0);
    CHECK_THROWS_AS(evaluate(w, u), std::invalid_argument);
}

TEST_CASE("repair: worked examples") {
    {
        Vector v(3);
        v << -0.2, 0.5, 0.5;
        const auto r = repair(v);
        REQUIRE(r.has_value());
        CHECK((*r)[0] == 0.0);
        CHECK((*r)[1] == 0.5);
        CHECK((*r)[2] == 0.5);
    }
    {
        Vector v(2);
        v << 0.2, 0.2;
        const auto r = repair(v);
        REQUIRE(r.has_value());
        CHECK((*r)[0] == doctest::Approx(0.5));
        CHECK((*r)[1] == doctest::Approx(0.5));
    }
    {
        Vector v(2);
        v << -1.0, -2.0;
        CHECK_FALSE(repair(v).has_value());
        CHECK(repair_or_uniform(v) == uniform_weights(2));
    }
}

TEST_CASE("repair: simplex invariants and exact idempotence over random input") {
    Rng rng(20260810);
    for (int trial = 0; trial < 20000; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.below(225));
        Vector v(n);
        for (Index i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 2.0);
        const auto r = repair(v);
        if (!r) {
            CHECK(v.maxCoeff() <= 0.0);
            continue;
        }
        CHECK(r->minCoeff() >= 0.0);
        CHECK(r->maxCoeff() <= 1.0 + 1e-12);
        CHECK(std::abs(r->sum() - 1.0) <= 1e-9);

        const auto again = repair(*r);
        REQUIRE(again.has_value());
        CHECK(*again == *r); // bitwise
    }
}

TEST_CASE("repair preserves proportions of the surviving entries") {
    Vector v(3);
    v << -1.0, 1.0, 3.0;
    const auto r = repair(v);
    REQUIRE(r.has_value());
    CHECK((*r)[2] == doctest::Approx(3.0 * (*r)[1]).epsilon(1e-12));
}

TEST_CASE("return is linear in the weights, risk convex") {
    const auto u = tiny_universe();
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector w1 = random_weights(u.n, rng);
        const Vector w2 = random_weights(u.n, rng);
        const double alpha = rng.uniform01();
        const Vector mix = alpha * w1 + (1.0 - alpha) * w2;
        const auto f1 = evaluate(w1, u);
        const auto f2 = evaluate(w2, u);
        const auto fm = evaluate(mix, u);
        CHECK(fm.ret == doctest::Approx(alpha * f1.ret + (1 - alpha) * f2.ret).epsilon(1e-12));
        CHECK(fm.risk <= std::max(f1.risk, f2.risk) + 1e-15);
    }
}

TEST_CASE("random_solution: 1-D simplex is a point, seeds are reproducible") {
    const auto u = tiny_universe();
    {
        Rng rng(1);
        std::istringstream in("1\n0.1 0.2\n1 1 1.0");
        const auto u1 = parse_universe(in);
        const auto s = random_solution(1, u1, rng);
        CHECK(s.weights[0] == 1.0);
    }
    {
        Rng a(42), b(42);
        CHECK(random_weights(31, a) == random_weights(31, b));
    }
}

TEST_CASE("random_solution: mean weight is 1/n by Monte Carlo") {
    // Oracle: the construction is symmetric in the coordinates, so each
    // weight has expectation 1/n; compare the sample mean of weight 0
    // against that with a 3-standard-error band.
    Rng rng(777);
    const Index n = 7;
    const int draws = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double w0 = random_weights(n, rng)[0];
        sum += w0;
        sumsq += w0 * w0;
    }
    const double mean = sum / draws;
    const double var = sumsq / draws - mean * mean;
    const double se = std::sqrt(var / draws);
    CHECK(std::abs(mean - 1.0 / static_cast<double>(n)) <= 3.0 * se);
}

TEST_CASE("cached objectives match re-evaluation") {
    const auto u = tiny_universe();
    Rng rng(3);
    const auto s = random_solution(u.n, u, rng);
    const auto f = evaluate(s.weights, u);
    CHECK(s.objectives.ret == doctest::Approx(f.ret).epsilon(1e-12));
    CHECK(s.objectives.risk == doctest::Approx(f.risk).epsilon(1e-12));
}
