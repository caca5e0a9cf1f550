#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moport/rng.hpp"
#include "moport/scalarization.hpp"

using namespace moport;

TEST_CASE("classic Tchebycheff worked examples") {
    const Vector2 z{0.0, 0.0};
    CHECK(tchebycheff_min_space<double>({0.2, 0.6}, {0.5, 0.5}, z) == doctest::Approx(0.3));
    CHECK(tchebycheff_min_space<double>({0.0, 0.0}, {0.5, 0.5}, z) == 0.0);
    CHECK(tchebycheff_min_space<double>({0.4, 9.9}, {1.0, 0.0}, z) == doctest::Approx(0.4));
}

TEST_CASE("boundary-intersection Tchebycheff is signed") {
    const Vector2 f1{0.0, 1.0}, f2{1.0, 0.0};
    const Vector2 lambda = chim_normal(f1, f2);
    CHECK(lambda[0] == 1.0);
    CHECK(lambda[1] == 1.0);

    const auto refs = make_reference_points(f1, f2, 3);
    const Vector2 mid = refs[1];
    CHECK(mid[0] == doctest::Approx(0.5));
    CHECK(mid[1] == doctest::Approx(0.5));

    CHECK(nbi_tchebycheff_min_space<double>({0.7, 0.6}, lambda, mid) == doctest::Approx(0.2));
    CHECK(nbi_tchebycheff_min_space<double>(mid, lambda, mid) == 0.0);
    CHECK(nbi_tchebycheff_min_space<double>({0.4, 0.3}, lambda, mid) < 0.0);
}

TEST_CASE("reference points: endpoints, spacing, collinearity") {
    {
        const auto refs = make_reference_points<double>({0.0, 1.0}, {1.0, 0.0}, 3);
        CHECK(refs[0] == Vector2{0.0, 1.0});
        CHECK(refs[1] == Vector2{0.5, 0.5});
        CHECK(refs[2] == Vector2{1.0, 0.0});
    }
    {
        const auto refs = make_reference_points<double>({0.0, 1.0}, {1.0, 0.0}, 2);
        CHECK(refs.size() == 2);
        CHECK(refs[0] == Vector2{0.0, 1.0});
        CHECK(refs[1] == Vector2{1.0, 0.0});
    }
    {
        const Vector2 f1{0.0, 0.0}, f2{1.0, 1.0};
        const auto refs = make_reference_points(f1, f2, 100);
        CHECK(refs.size() == 100);
        for (std::size_t i = 0; i + 1 < refs.size(); ++i) {
            CHECK(refs[i + 1][0] - refs[i][0] == doctest::Approx(1.0 / 99.0).epsilon(1e-12));
            CHECK(refs[i + 1][1] - refs[i][1] == doctest::Approx(1.0 / 99.0).epsilon(1e-12));
        }
        // collinear with the extremes: cross product within 1e-12
        const Vector2 d = f2 - f1;
        for (const auto& r : refs) {
            const Vector2 e = r - f1;
            CHECK(std::abs(d[0] * e[1] - d[1] * e[0]) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(make_reference_points<double>({0, 0}, {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("neighborhoods: T=N, interior T=3, T=1, self-membership") {
    std::vector<Vector2> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({static_cast<double>(i), 0.0});

    const auto full = nearest_neighbor_table(pts, 6);
    for (const auto& row : full) CHECK(row.size() == 6);

    const auto three = nearest_neighbor_table(pts, 3);
    // interior point 2: itself plus both immediate neighbors
    std::vector<int> sorted = three[2];
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3});

    const auto one = nearest_neighbor_table(pts, 1);
    for (int i = 0; i < 6; ++i) CHECK(one[static_cast<std::size_t>(i)][0] == i);

    for (int i = 0; i < 6; ++i) {
        bool self = false;
        for (int j : three[static_cast<std::size_t>(i)]) self |= (j == i);
        CHECK(self);
    }
}

TEST_CASE("context: extremes update and degenerate handling") {
    ScalarizationContext ctx(4, 2);
    ctx.initialize({{0.1, 0.05}, {0.3, 0.2}, {0.2, 0.1}, {0.15, 0.3}});
    // best return = 0.3 -> F1 = (-0.3, 0.2); best risk -> F2 = (-0.1, 0.05)
    CHECK(ctx.extreme_best_return() == Vector2{-0.3, 0.2});
    CHECK(ctx.extreme_best_risk() == Vector2{-0.1, 0.05});
    const Vector2 lambda_before = ctx.normal_vector();
    CHECK(lambda_before[0] == doctest::Approx(0.15)); // |0.05 - 0.2|
    CHECK(lambda_before[1] == doctest::Approx(0.2));  // |-0.1 + 0.3|

    // a point dominating neither extreme leaves everything unchanged
    CHECK_FALSE(ctx.update_extremes({0.25, 0.15}));
    CHECK(ctx.normal_vector() == lambda_before);

    // strictly better return replaces F1 and lambda is recomputed
    CHECK(ctx.update_extremes({0.4, 0.25}));
    CHECK(ctx.extreme_best_return() == Vector2{-0.4, 0.25});
    CHECK(ctx.normal_vector()[0] == doctest::Approx(0.2));
    CHECK(ctx.normal_vector()[1] == doctest::Approx(0.3));

    // reference points stay collinear with the extremes
    const Vector2 d = ctx.extreme_best_risk() - ctx.extreme_best_return();
    for (const auto& r : ctx.reference_points()) {
        const Vector2 e = r - ctx.extreme_best_return();
        CHECK(std::abs(d[0] * e[1] - d[1] * e[0]) <= 1e-12);
    }
    for (int i = 0; i < 4; ++i) {
        bool self = false;
        for (int j : ctx.neighborhood(i)) self |= (j == i);
        CHECK(self);
    }
}

TEST_CASE("context: identical population degenerates to lambda = 0") {
    ScalarizationContext ctx(3, 3);
    ctx.initialize({{0.1, 0.1}, {0.1, 0.1}, {0.1, 0.1}});
    CHECK(ctx.degenerate());
    CHECK(ctx.nbi_value({0.1, 0.1}, 0) == 0.0);
    CHECK(ctx.nbi_value({0.9, 0.4}, 1) == 0.0);
}

TEST_CASE("scaling both objectives rescales values uniformly, argmin unchanged") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ObjectivePoint> candidates;
        for (int i = 0; i < 12; ++i) {
            candidates.push_back({rng.uniform(-0.01, 0.01), rng.uniform(0.0, 0.005)});
        }
        const double c = rng.uniform(0.1, 50.0);

        ScalarizationContext ctx(5, 3), scaled(5, 3);
        std::vector<ObjectivePoint> init = {candidates[0], candidates[1], candidates[2],
                                            candidates[3], candidates[4]};
        std::vector<ObjectivePoint> init_scaled;
        for (const auto& f : init) init_scaled.push_back({c * f.ret, c * f.risk});
        ctx.initialize(init);
        scaled.initialize(init_scaled);

        for (int sub = 0; sub < 5; ++sub) {
            std::size_t best = 0, best_scaled = 0;
            double ratio = 0.0;
            bool ratio_set = false;
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                const double v = ctx.nbi_value(candidates[k], sub);
                const double vs =
                    scaled.nbi_value({c * candidates[k].ret, c * candidates[k].risk}, sub);
                if (v < ctx.nbi_value(candidates[best], sub)) best = k;
                if (vs < scaled.nbi_value({c * candidates[best_scaled].ret,
                                           c * candidates[best_scaled].risk},
                                          sub)) {
                    best_scaled = k;
                }
                if (v != 0.0) {
                    const double r = vs / v;
                    if (ratio_set) {
                        CHECK(r == doctest::Approx(ratio).epsilon(1e-9));
                    } else {
                        ratio = r;
                        ratio_set = true;
                    }
                    CHECK(r > 0.0);
                }
            }
            CHECK(best == best_scaled);
        }
    }
}
