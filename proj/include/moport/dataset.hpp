#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "moport/types.hpp"

namespace moport {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expected returns and return covariance for a set of assets.
///
/// Files store per-asset standard deviations plus pairwise correlations;
/// conversion to covariance happens at parse time, so everything downstream
/// sees sigma_ij directly. The parsed correlations are retained verbatim so
/// that serialization round-trips bit-for-bit.
struct AssetUniverse {
    Index n = 0;
    Vector mean_returns;
    Vector stddevs;
    Matrix covariance;
    Matrix correlations;
};

/// A known efficient frontier in (return, risk) coordinates, risk stored as
/// variance. File order is preserved; points found to be dominated by
/// another entry are flagged in `dominated` rather than dropped.
struct ReferenceFrontier {
    std::vector<ObjectivePoint> points;
    std::vector<Index> dominated;
};

/// Parses the benchmark universe format:
///   line 1:        n
///   next n lines:  mean_return stddev
///   remaining:     i j correlation   (1-based, every pair i <= j exactly once)
/// Tokens may be separated by any whitespace. Throws ParseError on malformed
/// input, wrong counts, missing or duplicate pairs, correlation outside
/// [-1, 1], or non-positive stddev.
AssetUniverse parse_universe(std::istream& in);

/// Inverse of parse_universe; emits full double precision so that
/// parse(serialize(u)) reproduces every field of u exactly.
void serialize_universe(const AssetUniverse& u, std::ostream& out);

/// Canonical JSON dump used by the CLI for debugging.
nlohmann::ordered_json universe_to_json(const AssetUniverse& u);

/// Parses a frontier file: one "mean_return variance" pair per line.
/// Throws ParseError on malformed input or an empty stream.
ReferenceFrontier parse_frontier(std::istream& in);

AssetUniverse load_universe(const std::string& path);
ReferenceFrontier load_frontier(const std::string& path);

} // namespace moport
