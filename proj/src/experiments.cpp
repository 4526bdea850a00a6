#include "entloc/experiments.hpp"

#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "entloc/cluster.hpp"
#include "entloc/errors.hpp"
#include "entloc/version.hpp"

namespace entloc {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += header[i];
        out += (i + 1 < header.size()) ? "," : "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? "," : "\n";
        }
    }
    return out;
}

std::string Table::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) obj[header[i]] = row[i];
        rows_json.push_back(obj);
    }
    return rows_json.dump(2) + "\n";
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["version"] = version.empty() ? kVersion : version;
    j["duration_seconds"] = duration_seconds;
    return j.dump(2) + "\n";
}

Table run_ps(const PsRunConfig& cfg) {
    Table t;
    t.header = {"n", "n_a", "trials", "p_hat", "stderr", "approx", "lower", "upper"};
    for (const int n_a : cfg.n_a_values) {
        EnsembleSpec spec = cfg.spec;
        spec.n_a = n_a;
        const EstimateResult res = ps_montecarlo(spec, cfg.trials, cfg.seed, cfg.threads);
        const double d_a = std::pow(2.0, n_a);
        const double d_b = std::pow(2.0, spec.n - n_a);
        const PsBounds bounds = ps_bounds(d_a, d_b, cfg.r);
        t.rows.push_back({std::to_string(spec.n), std::to_string(n_a), std::to_string(res.trials),
                          format_value(res.estimate), format_value(res.std_error),
                          format_value(ps_approx(d_a, d_b)), format_value(bounds.lower),
                          format_value(bounds.upper)});
    }
    return t;
}

Table run_haar_scan(const HaarScanConfig& cfg) {
    if (cfg.n_b % 2 != 0) throw contract_error("run_haar_scan: n_b must be even");
    Table t;
    t.header = {"n_a", "n_b", "mean_ea", "std_ea", "mean_le", "std_le", "k", "ea_floor"};
    const int nthreads = resolve_threads(cfg.threads);
    for (const int n_a : cfg.n_a_values) {
        const int n = n_a + cfg.n_b;
        if (n > kStateQubitCap) throw capability_error("run_haar_scan: state size exceeds cap");
        const Bipartition bp{n, (std::uint64_t(1) << n_a) - 1};
        std::vector<double> ea_vals(cfg.samples, 0.0), le_vals(cfg.samples, 0.0);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int s = 0; s < cfg.samples; ++s) {
            Rng rng(derive_seed(cfg.seed, (std::uint64_t(n_a) << 32) | std::uint64_t(s)));
            const StateVector psi = haar_state(n, rng);
            ea_vals[s] = ea(psi, bp);
            if (cfg.with_le) {
                OptimizerConfig opt = cfg.optimizer;
                opt.seed = derive_seed(cfg.seed, (std::uint64_t(n_a) << 40) | std::uint64_t(s));
                le_vals[s] = le(psi, bp, opt);
            }
        }
        auto mean_std = [](const std::vector<double>& v) {
            double mean = 0;
            for (double x : v) mean += x;
            mean /= static_cast<double>(v.size());
            double var = 0;
            for (double x : v) var += (x - mean) * (x - mean);
            var /= static_cast<double>(v.size());
            return std::pair(mean, std::sqrt(var));
        };
        const auto [mean_ea, std_ea] = mean_std(ea_vals);
        const double d_a = std::pow(2.0, n_a);
        const double d_b = std::pow(2.0, cfg.n_b);
        std::vector<std::string> row = {std::to_string(n_a), std::to_string(cfg.n_b),
                                        format_value(mean_ea), format_value(std_ea)};
        if (cfg.with_le) {
            const auto [mean_le, std_le] = mean_std(le_vals);
            row.push_back(format_value(mean_le));
            row.push_back(format_value(std_le));
        } else {
            row.push_back("");
            row.push_back("");
        }
        row.push_back(format_value(k_constant(static_cast<std::uint64_t>(d_b))));
        row.push_back(format_value(1.0 - std::sqrt(2.0 * d_b / d_a)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_cluster(int n_from, int n_to, int threads) {
    Table t;
    t.header = {"n", "s_count", "t_count", "ratio", "f", "g_series_check"};
    const std::vector<BigInt> series = g_series(std::max(n_to, 30));
    for (int n = n_from; n <= n_to; ++n) {
        const ClusterCensus c = census(n, threads);
        const bool series_ok = g_count(std::max(n, 2)) == series[static_cast<std::size_t>(std::max(n, 2))];
        t.rows.push_back({std::to_string(n), std::to_string(c.s_count), std::to_string(c.t_count),
                          format_value(c.ratio()), fib_f(n).str(), series_ok ? "ok" : "FAIL"});
    }
    return t;
}

OracleSweepResult oracle_equivalence_sweep(int n, int threads) {
    const int edges = n * (n - 1) / 2;
    const std::uint64_t graphs = std::uint64_t(1) << edges;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    const int nthreads = resolve_threads(threads);
    OracleSweepResult out;
    std::uint64_t checked = 0, mismatches = 0;
    double worst = 0;
#pragma omp parallel num_threads(nthreads)
    {
        std::uint64_t local_checked = 0, local_mismatches = 0;
        double local_worst = 0;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(graphs); ++mask) {
            const Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
            const StateVector psi = build_graph_state(g);
            for (std::uint64_t a_mask = 0; a_mask < full; ++a_mask) {
                const int nb = n - std::popcount(a_mask);
                if (nb < 2 || nb % 2 != 0) continue;
                const Bipartition bp{n, a_mask};
                const bool predicted = ea_graph_test(g, bp);
                const DensityMatrix rho = partial_trace(psi, bp.b_mask());
                const double dense = ea_from_marginal(rho);
                const double ratio = trace_ratio(rho);
                const double rounding =
                    std::max(std::min(std::abs(dense), std::abs(dense - 1.0)),
                             std::min(std::abs(ratio), std::abs(ratio - 1.0)));
                local_worst = std::max(local_worst, rounding);
                ++local_checked;
                if (rounding > 1e-9 || predicted != (dense > 0.5) || predicted != (ratio > 0.5))
                    ++local_mismatches;
            }
        }
#pragma omp critical
        {
            checked += local_checked;
            mismatches += local_mismatches;
            worst = std::max(worst, local_worst);
        }
    }
    out.checked = checked;
    out.mismatches = mismatches;
    out.worst_rounding = worst;
    return out;
}

EnsembleMoments ensemble_moments(int n, int n_a, int threads) {
    if (n > 6) throw capability_error("ensemble_moments: exhaustive sweep capped at n = 6");
    if ((n - n_a) % 2 != 0) throw contract_error("ensemble_moments: |B| must be even");
    const int edges = n * (n - 1) / 2;
    const std::uint64_t graphs = std::uint64_t(1) << edges;
    const Bipartition bp{n, (std::uint64_t(1) << n_a) - 1};
    const int nthreads = resolve_threads(threads);
    double sum_overlap = 0, sum_purity = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : sum_overlap, sum_purity) \
    num_threads(nthreads)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(graphs); ++mask) {
        const Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
        const StateVector psi = build_graph_state(g);
        const DensityMatrix rho = partial_trace(psi, bp.b_mask());
        const DensityMatrix flipped = spin_flip(rho);
        sum_overlap += (rho.m * flipped.m).trace().real();
        sum_purity += rho.m.squaredNorm();
    }
    EnsembleMoments out;
    out.mean_overlap = sum_overlap / static_cast<double>(graphs);
    out.mean_purity = sum_purity / static_cast<double>(graphs);
    return out;
}

bool VerifyReport::all_passed() const {
    for (const VerifyItem& item : items)
        if (!item.passed) return false;
    return true;
}

VerifyReport run_verify(int max_n, int threads) {
    VerifyReport report;
    for (int n = 2; n <= max_n; ++n) {
        const OracleSweepResult sweep = oracle_equivalence_sweep(n, threads);
        VerifyItem item;
        item.name = "matrix test vs dense fidelity, n = " + std::to_string(n);
        item.passed = sweep.mismatches == 0;
        item.detail = std::to_string(sweep.checked) + " configurations, worst rounding " +
                      format_value(sweep.worst_rounding);
        report.items.push_back(std::move(item));
    }
    const std::vector<std::pair<int, int>> points = {{3, 1}, {4, 2}, {5, 1}, {5, 3}};
    for (const auto& [n, n_a] : points) {
        const EnsembleMoments m = ensemble_moments(n, n_a, threads);
        const double d_a = std::pow(2.0, n_a);
        const double d_b = std::pow(2.0, n - n_a);
        const double expect_overlap = (d_a + 1.0) / (d_a * d_b);
        const double expect_purity = (d_a + d_b - 1.0) / (d_a * d_b);
        VerifyItem item;
        item.name = "ensemble expectations, n = " + std::to_string(n) + ", n_a = " + std::to_string(n_a);
        item.passed = std::abs(m.mean_overlap - expect_overlap) <= 1e-12 &&
                      std::abs(m.mean_purity - expect_purity) <= 1e-12;
        item.detail = "overlap " + format_value(m.mean_overlap) + " vs " + format_value(expect_overlap) +
                      ", purity " + format_value(m.mean_purity) + " vs " + format_value(expect_purity);
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace entloc
