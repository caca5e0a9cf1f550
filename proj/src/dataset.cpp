#include "moport/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace moport {

namespace {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

AssetUniverse parse_universe(std::istream& in) {
    long long n_raw = 0;
    if (!(in >> n_raw) || n_raw < 1) {
        throw ParseError("universe: expected positive asset count on line 1");
    }
    const Index n = static_cast<Index>(n_raw);

    AssetUniverse u;
    u.n = n;
    u.mean_returns.resize(n);
    u.stddevs.resize(n);
    for (Index i = 0; i < n; ++i) {
        double mean = 0, sd = 0;
        if (!(in >> mean >> sd)) {
            throw ParseError("universe: malformed asset line " + std::to_string(i + 1));
        }
        if (!(sd > 0.0) || !std::isfinite(sd) || !std::isfinite(mean)) {
            throw ParseError("universe: non-positive stddev for asset " + std::to_string(i + 1));
        }
        u.mean_returns[i] = mean;
        u.stddevs[i] = sd;
    }

    // Correlation entries may appear in any order but every pair i <= j must
    // show up exactly once.
    Matrix corr = Matrix::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
    long long i_raw = 0, j_raw = 0;
    double rho = 0;
    Index listed = 0;
    while (in >> i_raw >> j_raw >> rho) {
        if (i_raw < 1 || j_raw < 1 || i_raw > n || j_raw > n) {
            throw ParseError("universe: correlation index out of range: " +
                             std::to_string(i_raw) + " " + std::to_string(j_raw));
        }
        if (!(rho >= -1.0 && rho <= 1.0)) {
            throw ParseError("universe: correlation outside [-1, 1] for pair " +
                             std::to_string(i_raw) + " " + std::to_string(j_raw));
        }
        const Index i = static_cast<Index>(std::min(i_raw, j_raw)) - 1;
        const Index j = static_cast<Index>(std::max(i_raw, j_raw)) - 1;
        if (!std::isnan(corr(i, j))) {
            throw ParseError("universe: duplicate correlation pair " +
                             std::to_string(i + 1) + " " + std::to_string(j + 1));
        }
        corr(i, j) = rho;
        corr(j, i) = rho;
        ++listed;
    }
    if (!in.eof() && in.fail()) {
        // operator>> stopped on a token that is not part of a valid triple.
        throw ParseError("universe: malformed correlation line after " +
                         std::to_string(listed) + " entries");
    }
    if (listed != n * (n + 1) / 2) {
        throw ParseError("universe: expected " + std::to_string(n * (n + 1) / 2) +
                         " correlation pairs, found " + std::to_string(listed));
    }

    u.correlations = corr;
    u.covariance = corr.cwiseProduct(u.stddevs * u.stddevs.transpose());
    return u;
}

void serialize_universe(const AssetUniverse& u, std::ostream& out) {
    out << u.n << "\n";
    for (Index i = 0; i < u.n; ++i) {
        out << format_full(u.mean_returns[i]) << " " << format_full(u.stddevs[i]) << "\n";
    }
    for (Index i = 0; i < u.n; ++i) {
        for (Index j = i; j < u.n; ++j) {
            out << (i + 1) << " " << (j + 1) << " " << format_full(u.correlations(i, j)) << "\n";
        }
    }
}

nlohmann::ordered_json universe_to_json(const AssetUniverse& u) {
    nlohmann::ordered_json j;
    j["n"] = u.n;
    j["mean_returns"] = std::vector<double>(u.mean_returns.begin(), u.mean_returns.end());
    j["stddevs"] = std::vector<double>(u.stddevs.begin(), u.stddevs.end());
    auto matrix_rows = [](const Matrix& m) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
        for (Index r = 0; r < m.rows(); ++r) {
            rows[static_cast<std::size_t>(r)].assign(m.row(r).begin(), m.row(r).end());
        }
        return rows;
    };
    j["correlations"] = matrix_rows(u.correlations);
    j["covariance"] = matrix_rows(u.covariance);
    return j;
}

ReferenceFrontier parse_frontier(std::istream& in) {
    ReferenceFrontier f;
    double ret = 0, risk = 0;
    while (in >> ret >> risk) {
        if (!std::isfinite(ret) || !std::isfinite(risk)) {
            throw ParseError("frontier: non-finite point " + std::to_string(f.points.size() + 1));
        }
        f.points.push_back({ret, risk});
    }
    if (!in.eof() && in.fail()) {
        throw ParseError("frontier: malformed line after " + std::to_string(f.points.size()) +
                         " points");
    }
    if (f.points.empty()) {
        throw ParseError("frontier: empty stream");
    }
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        for (std::size_t j = 0; j < f.points.size(); ++j) {
            if (i != j && dominates(f.points[j], f.points[i])) {
                f.dominated.push_back(static_cast<Index>(i));
                break;
            }
        }
    }
    return f;
}

AssetUniverse load_universe(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open universe file: " + path);
    return parse_universe(in);
}

ReferenceFrontier load_frontier(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open frontier file: " + path);
    return parse_frontier(in);
}

} // namespace moport
