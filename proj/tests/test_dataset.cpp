#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "moport/dataset.hpp"

using namespace moport;

namespace {

std::string data_dir() {
    const char* env = std::getenv("MOPORT_DATA_DIR");
    return env ? env : "data";
}

AssetUniverse parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_universe(in);
}

} // namespace

TEST_CASE("two-asset universe parses and converts correlation to covariance") {
    const auto u = parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1.0\n1 2 0.5\n2 2 1.0");
    CHECK(u.n == 2);
    CHECK(u.mean_returns[0] == doctest::Approx(0.1));
    CHECK(u.covariance(0, 0) == doctest::Approx(0.04));
    CHECK(u.covariance(0, 1) == doctest::Approx(0.01));
    CHECK(u.covariance(1, 0) == doctest::Approx(0.01));
    CHECK(u.covariance(1, 1) == doctest::Approx(0.01));
}

TEST_CASE("whitespace runs and newlines both separate tokens") {
    const auto u = parse_text("2  0.1   0.2\n\n0.05\t0.1  1 1 1.0 1 2 0.5\n2 2 1.0\n");
    CHECK(u.n == 2);
    CHECK(u.covariance(0, 1) == doctest::Approx(0.01));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_text(""), ParseError);
    CHECK_THROWS_AS(parse_text("0\n"), ParseError);
    // malformed asset line
    CHECK_THROWS_AS(parse_text("2\n0.1 x\n0.05 0.1\n1 1 1\n1 2 0\n2 2 1"), ParseError);
    // non-positive stddev
    CHECK_THROWS_AS(parse_text("2\n0.1 0.0\n0.05 0.1\n1 1 1\n1 2 0\n2 2 1"), ParseError);
    // missing pair (only diagonal listed)
    CHECK_THROWS_AS(parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1\n2 2 1"), ParseError);
    // duplicate pair
    CHECK_THROWS_AS(parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1\n1 2 0\n1 2 0\n2 2 1"), ParseError);
    // correlation out of range
    CHECK_THROWS_AS(parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1\n1 2 1.5\n2 2 1"), ParseError);
    // index out of range
    CHECK_THROWS_AS(parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1\n1 3 0\n2 2 1"), ParseError);
}

TEST_CASE("serialization round-trips every field bit-for-bit") {
    const auto u = parse_text("3\n0.01 0.031\n-0.002 0.047\n0.0055 0.026\n"
                              "1 1 1\n1 2 0.31\n1 3 -0.12\n2 2 1\n2 3 0.0777\n3 3 1");
    std::ostringstream out;
    serialize_universe(u, out);
    const auto again = parse_text(out.str());
    CHECK(again.n == u.n);
    CHECK(again.mean_returns == u.mean_returns);
    CHECK(again.stddevs == u.stddevs);
    CHECK(again.correlations == u.correlations);
    CHECK(again.covariance == u.covariance);
}

TEST_CASE("benchmark files load with the documented sizes and invariants") {
    const struct {
        const char* file;
        Index n;
    } expected[] = {{"/port1.txt", 31}, {"/port2.txt", 85}, {"/port3.txt", 89},
                    {"/port4.txt", 98}, {"/port5.txt", 225}};
    for (const auto& e : expected) {
        const auto u = load_universe(data_dir() + e.file);
        CAPTURE(e.file);
        CHECK(u.n == e.n);

        // symmetric covariance, diagonal consistent with stddevs
        CHECK((u.covariance - u.covariance.transpose()).cwiseAbs().maxCoeff() == 0.0);
        for (Index i = 0; i < u.n; ++i) {
            CHECK(u.covariance(i, i) ==
                  doctest::Approx(u.stddevs[i] * u.stddevs[i]).epsilon(1e-12));
        }

        // positive semi-definite up to tolerance
        Eigen::SelfAdjointEigenSolver<Matrix> es(u.covariance);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        CHECK(lo >= -1e-8 * hi);
    }
}

TEST_CASE("frontier parsing keeps order and flags dominated points") {
    {
        std::istringstream in("0.1 0.01\n0.2 0.04\n");
        const auto f = parse_frontier(in);
        CHECK(f.points.size() == 2);
        CHECK(f.dominated.empty());
        CHECK(f.points[0].ret == 0.1);
    }
    {
        std::istringstream in("0.2 0.01\n0.1 0.04\n");
        const auto f = parse_frontier(in);
        REQUIRE(f.dominated.size() == 1);
        CHECK(f.dominated[0] == 1);
    }
    {
        std::istringstream empty("");
        CHECK_THROWS_AS(parse_frontier(empty), ParseError);
    }
    {
        std::istringstream bad("0.1 oops\n");
        CHECK_THROWS_AS(parse_frontier(bad), ParseError);
    }
}

TEST_CASE("benchmark frontiers are mutually non-dominated") {
    for (const char* file : {"/portef1.txt", "/portef5.txt"}) {
        const auto f = load_frontier(data_dir() + file);
        CAPTURE(file);
        CHECK(f.points.size() >= 100);
        CHECK(f.dominated.empty());
    }
}

TEST_CASE("universe JSON dump is canonical") {
    const auto u = parse_text("2\n0.1 0.2\n0.05 0.1\n1 1 1.0\n1 2 0.5\n2 2 1.0");
    const auto j = universe_to_json(u);
    CHECK(j.at("n") == 2);
    CHECK(j.at("covariance")[0][1] == 0.01);
    const auto keys = j.items().begin().key();
    CHECK(keys == "n"); // ordered dump, n first
}
