#include "entloc/reference.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "entloc/errors.hpp"

namespace entloc::ref {

int gf2_rank_naive(const Gf2Matrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (a[r][c] % 2 != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r != rank && a[r][c] % 2 != 0)
                for (int k = 0; k < m.cols(); ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
        }
        ++rank;
    }
    return rank;
}

bool gf2_solvable_bruteforce(const Gf2Matrix& m, const Gf2Vector& d) {
    if (m.cols() > 24) throw capability_error("gf2_solvable_bruteforce: too many columns");
    const std::uint64_t total = std::uint64_t(1) << m.cols();
    for (std::uint64_t xm = 0; xm < total; ++xm) {
        Gf2Vector x(m.cols());
        for (int c = 0; c < m.cols(); ++c) x.set(c, (xm >> c) & 1);
        if (gf2_matvec(m, x) == d) return true;
    }
    return m.rows() == 0;
}

StateVector graph_state_by_gates(const Graph& g) {
    const int n = g.num_vertices();
    StateVector s(n);
    const double amp = std::pow(2.0, -0.5 * n);
    for (auto& a : s.amp) a = amp;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            const std::uint64_t bi = std::uint64_t(1) << i;
            const std::uint64_t bj = std::uint64_t(1) << j;
            for (std::uint64_t z = 0; z < s.dim(); ++z)
                if ((z & bi) && (z & bj)) s.amp[z] = -s.amp[z];
        }
    }
    return s;
}

double n_tangle_materialized(const StateVector& s) {
    const StateVector flipped = spin_flip(s);
    cdouble acc(0, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) acc += std::conj(s.amp[i]) * flipped.amp[i];
    return std::abs(acc);
}

ExactProbability ps_exact_serial(int n, int n_a) {
    if (n > 6) throw capability_error("ps_exact_serial: exhaustive sweep capped at n = 6");
    if (n_a < 1 || n_a > n - 2 || (n - n_a) % 2 != 0)
        throw contract_error("ps_exact_serial: bad bipartition sizes");
    const Bipartition bp{n, (std::uint64_t(1) << n_a) - 1};
    const int edges = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << edges;
    std::uint64_t solvable = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        if (ea_graph_test(g, bp)) ++solvable;
    }
    return {solvable, total};
}

EstimateResult ps_montecarlo_serial(const EnsembleSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed) {
    spec.validate();
    if (spec.kind == EnsembleKind::IsomorphismClass)
        throw contract_error("ps_montecarlo_serial: class ensembles are record-driven");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t)
        if (ps_single_trial(spec, seed, t)) ++hits;
    EstimateResult res;
    res.trials = trials;
    res.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    res.std_error = std::sqrt(res.estimate * (1.0 - res.estimate) / static_cast<double>(trials));
    res.seed = seed;
    res.ensemble = spec;
    return res;
}

ClusterCensus census_serial(int n) {
    if (n < 2 || n > 20) throw contract_error("census_serial: n out of range");
    ClusterCensus out;
    out.n = n;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t a_mask = 1; a_mask < full; ++a_mask) {
        const int nb = n - std::popcount(a_mask);
        if (nb == 0 || nb % 2 != 0) continue;
        const Bipartition bp{n, a_mask};
        if (!pauli_toolbox_extractable(bp)) ++out.s_count;
        if (!matrix_test_line(bp)) ++out.t_count;
    }
    return out;
}

std::uint64_t independent_subset_count(int n) {
    if (n < 0) throw contract_error("independent_subset_count: n must be nonnegative");
    if (n > 24) throw capability_error("independent_subset_count: brute force capped at 24");
    const std::uint64_t total = std::uint64_t(1) << n;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if ((mask & (mask >> 1)) == 0) ++count;
    return count;
}

std::uint64_t end_anchored_island_count(int m) {
    if (m < 2) throw contract_error("end_anchored_island_count: m must be >= 2");
    if (m > 24) throw capability_error("end_anchored_island_count: brute force capped at 24");
    const std::uint64_t total = std::uint64_t(1) << m;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // Decompose into maximal runs; first run must be the 2-island at the
        // left edge, last run the 2-island at the right edge, all runs <= 2.
        std::vector<std::pair<int, int>> runs;
        int i = 0;
        while (i < m) {
            if (!((mask >> i) & 1)) {
                ++i;
                continue;
            }
            const int start = i;
            while (i < m && ((mask >> i) & 1)) ++i;
            runs.emplace_back(start, i - start);
        }
        if (runs.empty()) continue;
        bool ok = runs.front() == std::pair<int, int>(0, 2) &&
                  runs.back() == std::pair<int, int>(m - 2, 2);
        for (const auto& r : runs) ok = ok && r.second <= 2;
        if (ok) ++count;
    }
    return count;
}

}  // namespace entloc::ref
