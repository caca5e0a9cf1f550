// Generates the benchmark fixtures under data/: five synthetic asset
// universes in the classic portfolio-file format (sizes 31, 85, 89, 98, 225)
// and their exact long-only efficient frontiers.
//
// Universes come from a one-factor covariance model with dataset-specific
// return ranges. Frontiers are traced by solving
//     min  w' Sigma w - lambda mu' w   s.t.  sum w = 1, w >= 0
// with an active-set method, bisecting lambda to hit 2000 evenly spaced
// target returns between the minimum-variance return and the maximum asset
// return. Every emitted point is verified against the KKT conditions, so the
// files are optimal for the written universes to solver precision.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "moport/dataset.hpp"
#include "moport/metrics.hpp"
#include "moport/rng.hpp"

namespace {

using moport::Index;
using moport::Matrix;
using moport::Rng;
using moport::Vector;

struct DatasetParams {
    const char* universe_file;
    const char* frontier_file;
    Index n;
    std::uint64_t seed;
    double mu_lo, mu_hi;       // per-period mean return range
    double market_vol;         // factor volatility
    double idio_lo, idio_hi;   // idiosyncratic volatility range
};

constexpr DatasetParams kParams[] = {
    {"port1.txt", "portef1.txt", 31, 9101, 0.0015, 0.0105, 0.019, 0.012, 0.035},
    {"port2.txt", "portef2.txt", 85, 9202, 0.0010, 0.0095, 0.020, 0.012, 0.036},
    {"port3.txt", "portef3.txt", 89, 9303, 0.0012, 0.0072, 0.018, 0.011, 0.034},
    {"port4.txt", "portef4.txt", 98, 9404, 0.0008, 0.0082, 0.020, 0.012, 0.036},
    {"port5.txt", "portef5.txt", 225, 9505, -0.0045, 0.0012, 0.024, 0.013, 0.040},
};

std::string fmt(double v, const char* spec) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string synthesize_universe_text(const DatasetParams& p) {
    Rng rng(p.seed);
    const Index n = p.n;
    Vector mu(n), beta(n), idio(n), sd(n);
    for (Index i = 0; i < n; ++i) {
        mu[i] = rng.uniform(p.mu_lo, p.mu_hi);
        beta[i] = rng.uniform(0.55, 1.45);
        idio[i] = rng.uniform(p.idio_lo, p.idio_hi);
        const double var = beta[i] * beta[i] * p.market_vol * p.market_vol + idio[i] * idio[i];
        sd[i] = std::sqrt(var);
    }

    std::ostringstream out;
    out << n << "\n";
    for (Index i = 0; i < n; ++i) {
        out << fmt(mu[i], "%.9g") << " " << fmt(sd[i], "%.9g") << "\n";
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            double rho = 1.0;
            if (i != j) {
                rho = beta[i] * beta[j] * p.market_vol * p.market_vol / (sd[i] * sd[j]);
            }
            out << (i + 1) << " " << (j + 1) << " " << fmt(rho, "%.9g") << "\n";
        }
    }
    return out.str();
}

// Long-only mean-variance scalarization solver. Keeps its support across
// calls so that a lambda sweep warm-starts.
class SimplexQp {
public:
    SimplexQp(const Matrix& sigma, const Vector& mu)
        : sigma_(sigma), mu_(mu), in_support_(static_cast<std::size_t>(mu.size()), true) {}

    // Returns the optimal weights for the given lambda; throws if the active
    // set fails to settle or the KKT residuals stay large.
    Vector solve(double lambda) {
        const Index n = mu_.size();
        const int max_moves = 60 * static_cast<int>(n);
        for (int moves = 0; moves < max_moves; ++moves) {
            std::vector<Index> s;
            for (Index i = 0; i < n; ++i) {
                if (in_support_[static_cast<std::size_t>(i)]) s.push_back(i);
            }
            if (s.empty()) throw std::runtime_error("qp: empty support");
            const Index m = static_cast<Index>(s.size());

            Matrix a = Matrix::Zero(m + 1, m + 1);
            Vector b(m + 1);
            for (Index r = 0; r < m; ++r) {
                for (Index c = 0; c < m; ++c) a(r, c) = 2.0 * sigma_(s[r], s[c]);
                a(r, m) = 1.0;
                a(m, r) = 1.0;
                b[r] = lambda * mu_[s[r]];
            }
            b[m] = 1.0;
            const Vector x = a.partialPivLu().solve(b);

            Index worst = -1;
            double worst_w = -1e-13;
            for (Index r = 0; r < m; ++r) {
                if (x[r] < worst_w) {
                    worst_w = x[r];
                    worst = s[r];
                }
            }
            if (worst >= 0) {
                in_support_[static_cast<std::size_t>(worst)] = false;
                continue;
            }

            Vector w = Vector::Zero(n);
            for (Index r = 0; r < m; ++r) w[s[r]] = std::max(x[r], 0.0);
            const double gamma = x[m];
            const Vector grad = 2.0 * (sigma_ * w);
            const double scale =
                std::max({1.0, grad.cwiseAbs().maxCoeff(), std::abs(lambda) * 0.1});

            Index enter = -1;
            double worst_eta = -1e-9 * scale;
            for (Index j = 0; j < n; ++j) {
                if (in_support_[static_cast<std::size_t>(j)]) continue;
                const double eta = grad[j] + gamma - lambda * mu_[j];
                if (eta < worst_eta) {
                    worst_eta = eta;
                    enter = j;
                }
            }
            if (enter >= 0) {
                in_support_[static_cast<std::size_t>(enter)] = true;
                continue;
            }

            // Optimal: stationarity on the support, feasibility, and
            // non-negative multipliers off it.
            for (Index r = 0; r < m; ++r) {
                const double res = grad[s[r]] + gamma - lambda * mu_[s[r]];
                if (std::abs(res) > 1e-7 * scale) {
                    throw std::runtime_error("qp: stationarity residual too large");
                }
            }
            if (std::abs(w.sum() - 1.0) > 1e-10) {
                throw std::runtime_error("qp: budget violated");
            }
            return w;
        }
        throw std::runtime_error("qp: active set did not settle");
    }

private:
    const Matrix& sigma_;
    const Vector& mu_;
    std::vector<bool> in_support_;
};

std::string trace_frontier(const moport::AssetUniverse& u, Index points) {
    SimplexQp qp(u.covariance, u.mean_returns);

    Index top_asset = 0;
    u.mean_returns.maxCoeff(&top_asset);
    const double ret_top = u.mean_returns[top_asset];

    const Vector w_min_var = qp.solve(0.0);
    const double ret_lo = u.mean_returns.dot(w_min_var);
    if (!(ret_top > ret_lo)) throw std::runtime_error("frontier: degenerate return range");

    auto ret_at = [&](double lambda, Vector& w) {
        w = qp.solve(lambda);
        return u.mean_returns.dot(w);
    };

    std::vector<moport::ObjectivePoint> frontier;
    frontier.reserve(static_cast<std::size_t>(points));
    std::ostringstream out;
    Vector w;
    for (Index k = 0; k < points; ++k) {
        moport::ObjectivePoint pt;
        if (k == points - 1) {
            Vector vertex = Vector::Zero(u.n);
            vertex[top_asset] = 1.0;
            pt = {ret_top, u.covariance(top_asset, top_asset)};
        } else if (k == 0) {
            pt = {ret_lo, w_min_var.dot(u.covariance * w_min_var)};
        } else {
            const double target =
                ret_lo + (ret_top - ret_lo) * static_cast<double>(k) /
                             static_cast<double>(points - 1);
            double lo = 0.0, hi = 1e-3;
            while (ret_at(hi, w) < target) {
                hi *= 2.0;
                if (hi > 1e15) throw std::runtime_error("frontier: lambda blew up");
            }
            for (int iter = 0; iter < 90; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if (ret_at(mid, w) < target) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            ret_at(hi, w);
            pt = {u.mean_returns.dot(w), w.dot(u.covariance * w)};
        }
        if (!frontier.empty()) {
            if (!(pt.ret > frontier.back().ret) || pt.risk < frontier.back().risk - 1e-15) {
                throw std::runtime_error("frontier: non-monotone trace at point " +
                                         std::to_string(k));
            }
        }
        frontier.push_back(pt);
        out << fmt(pt.ret, "%.12g") << " " << fmt(pt.risk, "%.12g") << "\n";
    }

    const auto archive = moport::nondominated_filter(frontier);
    if (archive.points.size() != frontier.size()) {
        throw std::runtime_error("frontier: dominated points in trace");
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    std::string out_dir = "data";
    Index points = 2000;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc) {
            out_dir = argv[++i];
        } else if (arg == "--points" && i + 1 < argc) {
            points = std::stoll(argv[++i]);
        } else {
            std::cerr << "usage: make_benchmark [--out DIR] [--points K]\n";
            return 2;
        }
    }

    try {
        std::filesystem::create_directories(out_dir);
        for (const auto& p : kParams) {
            const std::string text = synthesize_universe_text(p);
            std::istringstream in(text);
            const moport::AssetUniverse u = moport::parse_universe(in);

            Index top = 0;
            u.mean_returns.maxCoeff(&top);
            Index count_at_top = 0;
            for (Index i = 0; i < u.n; ++i) {
                if (u.mean_returns[i] == u.mean_returns[top]) ++count_at_top;
            }
            if (count_at_top != 1) {
                throw std::runtime_error("tie at the maximum mean return; adjust the seed");
            }

            std::ofstream uf(std::filesystem::path(out_dir) / p.universe_file,
                             std::ios::binary);
            uf << text;

            const std::string frontier = trace_frontier(u, points);
            std::ofstream ff(std::filesystem::path(out_dir) / p.frontier_file,
                             std::ios::binary);
            ff << frontier;

            std::cout << p.universe_file << ": n=" << u.n << ", frontier " << points
                      << " points\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
