#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>

#include "moport/operators.hpp"
#include "moport/rng.hpp"

using namespace moport;

namespace {

// Scripted random source for injecting exact draws into the operators.
struct FakeRng {
    std::deque<double> u01;
    std::deque<double> uab;
    std::deque<double> norm;
    std::deque<std::uint64_t> ints;

    double uniform01() {
        const double v = u01.front();
        u01.pop_front();
        return v;
    }
    double uniform(double, double) {
        const double v = uab.front();
        uab.pop_front();
        return v;
    }
    double normal01() {
        const double v = norm.front();
        norm.pop_front();
        return v;
    }
    std::uint64_t below(std::uint64_t) {
        const std::uint64_t v = ints.front();
        ints.pop_front();
        return v;
    }
};

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

} // namespace

TEST_CASE("mantegna sigma_u: closed form at beta = 1, frozen oracle at beta = 0.3") {
    CHECK(mantegna_sigma_u(1.0) == 1.0);
    // Reference value from a 60-digit gamma-function evaluation of
    // [G(1+b) sin(pi b/2) / (G((1+b)/2) b 2^((b-1)/2))]^(1/b) at b = 0.3.
    const double oracle = 2.1041137929233265;
    CHECK(std::abs(mantegna_sigma_u(0.3) - oracle) <= 1e-10 * oracle);
}

TEST_CASE("mantegna sampler consumes u then v and rejects beta out of range") {
    FakeRng rng;
    rng.norm = {2.0, 4.0}; // u = 2 * sigma_u(1) = 2, v = 4 -> 2 / 4 = 0.5
    CHECK(mantegna_sample(1.0, rng) == doctest::Approx(0.5));
    Rng real(1);
    CHECK_THROWS_AS(mantegna_sample(0.1, real), std::invalid_argument);
    CHECK_THROWS_AS(mantegna_sample(2.5, real), std::invalid_argument);
}

TEST_CASE("mantegna at beta = 1 is Cauchy: 1e4-sample KS sanity check") {
    Rng rng(13);
    const int n = 10000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = mantegna_sample(1.0, rng);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double cdf = 0.5 + std::atan(xs[static_cast<std::size_t>(i)]) / M_PI;
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - cdf));
    }
    CHECK(ks < 0.03);
}

TEST_CASE("heavy tail: beta 0.3 throws far more huge steps than beta 1.5") {
    Rng rng(555);
    const int n = 200000;
    int big_03 = 0, big_15 = 0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(mantegna_sample(0.3, rng)) > 100.0) ++big_03;
        if (std::abs(mantegna_sample(1.5, rng)) > 100.0) ++big_15;
    }
    CHECK(big_03 > big_15);
    CHECK(big_03 > n / 100);
}

TEST_CASE("levy mutation: fixed points and injected steps") {
    Rng rng(2);
    const LevyParams params{1.0, 0.3};
    const Vector xi = vec2(0.6, 0.4);

    CHECK(levy_mutation(xi, xi, params, rng) == xi);

    // alpha0 = 0 annihilates the step no matter what is drawn
    Vector y = levy_mutation_with(xi, vec2(0.4, 0.6), 0.0, [] { return 123.0; });
    CHECK(y == xi);

    std::deque<double> steps{2.0, -1.0};
    y = levy_mutation_with(xi, vec2(0.4, 0.6), 1.0, [&] {
        const double s = steps.front();
        steps.pop_front();
        return s;
    });
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(0.6));
}

TEST_CASE("de mutation: arithmetic, degenerate pair, CR gate") {
    FakeRng rng;
    rng.u01 = {0.0};
    Vector y = de_mutation(vec2(0.5, 0.5), vec2(0.6, 0.4), vec2(0.4, 0.6), 1.3, 1.0, rng);
    CHECK(y[0] == doctest::Approx(0.76));
    CHECK(y[1] == doctest::Approx(0.24));

    rng.u01 = {0.0};
    y = de_mutation(vec2(0.5, 0.5), vec2(0.3, 0.3), vec2(0.3, 0.3), 1.3, 1.0, rng);
    CHECK(y == vec2(0.5, 0.5));

    rng.u01 = {0.5};
    y = de_mutation(vec2(0.5, 0.5), vec2(0.6, 0.4), vec2(0.4, 0.6), 1.3, 0.0, rng);
    CHECK(y == vec2(0.5, 0.5));
}

TEST_CASE("scaled-difference mutation: injected draws and fixed points") {
    FakeRng rng;
    rng.uab = {1.0, 1.0};
    Vector y = scaled_diff_mutation(vec2(0.5, 0.5), vec2(0.6, 0.4), vec2(0.4, 0.6), 0.5,
                                    DiffDist::Uniform, rng);
    CHECK(y[0] == doctest::Approx(0.6));
    CHECK(y[1] == doctest::Approx(0.4));

    rng.uab = {0.7, -0.3};
    y = scaled_diff_mutation(vec2(0.5, 0.5), vec2(0.6, 0.4), vec2(0.4, 0.6), 0.0,
                             DiffDist::Uniform, rng);
    CHECK(y == vec2(0.5, 0.5));

    rng.norm = {1.5, -2.5};
    y = scaled_diff_mutation(vec2(0.5, 0.5), vec2(0.3, 0.3), vec2(0.3, 0.3), 1.0,
                             DiffDist::Normal, rng);
    CHECK(y == vec2(0.5, 0.5));
}

TEST_CASE("difference mutations commute with coordinate permutation") {
    const Vector xi = vec2(0.6, 0.4), xj = vec2(0.1, 0.3);
    std::deque<double> steps{2.0, -3.0};
    auto pop_step = [&] {
        const double s = steps.front();
        steps.pop_front();
        return s;
    };
    const Vector y = levy_mutation_with(xi, xj, 0.7, pop_step);

    steps = {-3.0, 2.0}; // permuted per-gene draws
    const Vector y_perm = levy_mutation_with(vec2(0.4, 0.6), vec2(0.3, 0.1), 0.7, pop_step);
    CHECK(y[0] == y_perm[1]);
    CHECK(y[1] == y_perm[0]);

    FakeRng rng;
    rng.norm = {1.5, -0.5};
    const Vector z = scaled_diff_mutation(xi, xj, vec2(0.2, 0.9), 1.3, DiffDist::Normal, rng);
    rng.norm = {-0.5, 1.5};
    const Vector z_perm = scaled_diff_mutation(vec2(0.4, 0.6), vec2(0.3, 0.1), vec2(0.9, 0.2),
                                               1.3, DiffDist::Normal, rng);
    CHECK(z[0] == z_perm[1]);
    CHECK(z[1] == z_perm[0]);
}

TEST_CASE("polynomial mutation: identity, bound clamp, symmetry") {
    Rng rng(31);
    Vector x = vec2(0.25, 0.75);
    CHECK(polynomial_mutation(x, 0.0, 20.0, rng) == x);

    // gene at the lower bound with a downward draw stays put
    FakeRng fake;
    fake.u01 = {0.0, 0.25}; // mutate gate, then u <= 0.5 -> negative branch
    Vector at_zero(1);
    at_zero << 0.0;
    const Vector mutated = polynomial_mutation(at_zero, 1.0, 20.0, fake);
    CHECK(mutated[0] == 0.0);

    // symmetric kernel around 0.5: Monte Carlo mean within 3 SE
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    Vector mid(1);
    mid << 0.5;
    for (int i = 0; i < n; ++i) {
        const double v = polynomial_mutation(mid, 1.0, 20.0, rng)[0];
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::abs(mean - 0.5) <= 3.0 * se);
}

TEST_CASE("sbx: gate, equal parents, mean preservation") {
    Rng rng(8);
    const Vector p1 = vec2(0.3, 0.6), p2 = vec2(0.5, 0.4);

    auto [a, b] = sbx_crossover(p1, p2, 0.0, 20.0, rng);
    CHECK(a == p1);
    CHECK(b == p2);

    auto [c, d] = sbx_crossover(p1, p1, 1.0, 20.0, rng);
    CHECK(c == p1);
    CHECK(d == p1);

    FakeRng fake;
    for (int i = 0; i < 100; ++i) {
        fake.u01.push_back(0.0);                      // always cross
        fake.u01.push_back(0.005 + 0.0099 * i);       // spread draw, no clamping
    }
    for (int trial = 0; trial < 50; ++trial) {
        auto [x, y] = sbx_crossover(vec2(0.45, 0.55), vec2(0.52, 0.43), 1.0, 20.0, fake);
        for (int g = 0; g < 2; ++g) {
            CHECK(x[g] + y[g] == doctest::Approx(0.97).epsilon(1e-14));
        }
    }
}

TEST_CASE("parent selection schemes") {
    {
        FakeRng rng;
        rng.ints = {0};
        const std::vector<int> pool{5};
        const auto [i, j] = select_curr_plus_random(5, pool, rng);
        CHECK(i == 5);
        CHECK(j == 5);
    }
    {
        Rng rng(4);
        const std::vector<int> pool{3, 9};
        for (int t = 0; t < 50; ++t) {
            const auto [i, j, k] = select_three_random(7, pool, rng);
            CHECK(i == 7);
            CHECK(j != k);
        }
        const std::vector<int> tiny{3};
        CHECK_THROWS_AS(select_three_random(7, tiny, rng), std::invalid_argument);
    }
    {
        Rng a(11), b(11);
        const std::vector<int> pool{1, 2, 3, 4, 5};
        for (int t = 0; t < 20; ++t) {
            CHECK(select_curr_plus_random(0, pool, a) == select_curr_plus_random(0, pool, b));
            CHECK(select_three_random(0, pool, a) == select_three_random(0, pool, b));
            CHECK(select_two_random(pool, a) == select_two_random(pool, b));
        }
    }
}

TEST_CASE("operators replay exactly from an identical stream") {
    const Vector xi = vec2(0.2, 0.8), xj = vec2(0.7, 0.1), xk = vec2(0.4, 0.4);
    Rng a(90001), b(90001);
    const LevyParams lp{1e-5, 0.3};
    CHECK(levy_mutation(xi, xj, lp, a) == levy_mutation(xi, xj, lp, b));
    CHECK(de_mutation(xi, xj, xk, 1.3, 1.0, a) == de_mutation(xi, xj, xk, 1.3, 1.0, b));
    CHECK(scaled_diff_mutation(xi, xj, xk, 1.0, DiffDist::Uniform, a) ==
          scaled_diff_mutation(xi, xj, xk, 1.0, DiffDist::Uniform, b));
    CHECK(polynomial_mutation(xi, 0.5, 20.0, a) == polynomial_mutation(xi, 0.5, 20.0, b));
    const auto ca = sbx_crossover(xi, xj, 0.7, 20.0, a);
    const auto cb = sbx_crossover(xi, xj, 0.7, 20.0, b);
    CHECK(ca.first == cb.first);
    CHECK(ca.second == cb.second);
}
