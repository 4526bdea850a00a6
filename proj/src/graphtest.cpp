#include "entloc/graphtest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entloc/errors.hpp"

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

double binomial_stderr(double p, std::uint64_t trials) {
    return trials == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

// Uniform over bipartitions with nonempty A and nonempty even-size B.
Bipartition random_even_bipartition(int n, Rng& rng) {
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (;;) {
        const std::uint64_t a = rng.u64() & full;
        const int nb = n - std::popcount(a);
        if (a != 0 && nb >= 2 && nb % 2 == 0) return {n, a};
    }
}

// Uniform random size-k subset as a mask (partial Fisher-Yates).
std::uint64_t random_subset(int n, int k, Rng& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t j = i + rng.uniform_int(static_cast<std::uint64_t>(n - i));
        std::swap(v[i], v[j]);
        mask |= std::uint64_t(1) << v[i];
    }
    return mask;
}

EstimateResult estimate_from_flags(const std::vector<std::uint8_t>& pass, const EnsembleSpec& spec,
                                   std::uint64_t seed) {
    std::uint64_t hits = 0;
    for (std::uint8_t f : pass) hits += f;
    EstimateResult res;
    res.trials = pass.size();
    res.estimate = pass.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(pass.size());
    res.std_error = binomial_stderr(res.estimate, res.trials);
    res.seed = seed;
    res.ensemble = spec;
    return res;
}

// Exact class-uniform fraction: every record, every admissible bipartition,
// deduplicated under color-preserving isomorphism.
EstimateResult class_enumeration(const EnsembleSpec& spec, std::uint64_t seed) {
    const std::vector<Graph> records = read_graph6_file(spec.graph6_path);
    std::unordered_set<std::string> seen;
    std::uint64_t classes = 0, solvable = 0;
    for (const Graph& g : records) {
        if (g.num_vertices() != spec.n)
            throw input_error("graph6 record does not match ensemble vertex count");
        if (spec.connected_only && !connected(g)) continue;
        const std::uint64_t full = (std::uint64_t(1) << spec.n) - 1;
        for (std::uint64_t a = 1; a < full; ++a) {
            const int na = std::popcount(a);
            const int nb = spec.n - na;
            if (nb < 2 || nb % 2 != 0) continue;
            if (spec.n_a > 0 && na != spec.n_a) continue;
            const Bipartition bp{spec.n, a};
            if (!seen.insert(canonical_bipartition_key(g, bp)).second) continue;
            ++classes;
            if (ea_graph_test(g, bp)) ++solvable;
        }
    }
    if (classes == 0) throw input_error("graph6 source yielded no admissible bipartitions");
    EstimateResult res;
    res.trials = classes;
    res.estimate = static_cast<double>(solvable) / static_cast<double>(classes);
    res.std_error = binomial_stderr(res.estimate, classes);
    res.seed = seed;
    res.ensemble = spec;
    return res;
}

// One random bipartition per record, in file order.
EstimateResult record_sampling(const EnsembleSpec& spec, std::uint64_t trials, std::uint64_t seed,
                               int threads) {
    const std::vector<Graph> records = read_graph6_file(spec.graph6_path);
    std::vector<const Graph*> accepted;
    for (const Graph& g : records) {
        if (g.num_vertices() != spec.n)
            throw input_error("graph6 record does not match ensemble vertex count");
        if (spec.connected_only && !connected(g)) continue;
        accepted.push_back(&g);
        if (accepted.size() == trials) break;
    }
    if (accepted.size() < trials)
        throw input_error("graph6 source exhausted before reaching requested trial count");

    std::vector<std::uint8_t> pass(trials, 0);
    const int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        Bipartition bp;
        if (spec.n_a > 0) {
            bp = Bipartition{spec.n, random_subset(spec.n, spec.n_a, rng)};
        } else {
            bp = random_even_bipartition(spec.n, rng);
        }
        pass[t] = ea_graph_test(*accepted[t], bp) ? 1 : 0;
    }
    return estimate_from_flags(pass, spec, seed);
}

}  // namespace

void EnsembleSpec::validate() const {
    if (n < 2) throw contract_error("EnsembleSpec: n must be >= 2");
    if (n_a < 0 || n_a >= n) throw contract_error("EnsembleSpec: require 0 <= n_a < n");
    if (n_a > 0 && (n - n_a) % 2 != 0) throw contract_error("EnsembleSpec: |B| must be even");
    if (kind != EnsembleKind::IsomorphismClass && n_a == 0)
        throw contract_error("EnsembleSpec: this ensemble requires a fixed nonempty A");
    if (kind == EnsembleKind::Family && family == FamilyKind::RegularRandom) {
        if (regularity < 1 || regularity >= n || (std::int64_t(regularity) * n) % 2 != 0)
            throw contract_error("EnsembleSpec: invalid regularity");
    }
    if (kind == EnsembleKind::IsomorphismClass && graph6_path.empty())
        throw contract_error("EnsembleSpec: isomorphism-class ensembles need a graph6 source");
}

std::string EnsembleSpec::describe() const {
    switch (kind) {
        case EnsembleKind::Uniform: return "uniform";
        case EnsembleKind::IsomorphismClass: return "isomorphism-class";
        case EnsembleKind::Family:
            switch (family) {
                case FamilyKind::Path: return "family:path";
                case FamilyKind::Cycle: return "family:cycle";
                case FamilyKind::Complete: return "family:complete";
                case FamilyKind::RegularRandom:
                    return "family:regular" + std::to_string(regularity);
            }
    }
    return "?";
}

bool ea_graph_test(const Graph& g, const Bipartition& bp) {
    if (bp.n_b() % 2 != 0) throw contract_error("ea_graph_test: |B| must be even");
    const auto [gamma, d] = gamma_and_d(g, bp);
    return gf2_solve(gamma, d).has_value();
}

bool ps_single_trial(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t trial) {
    Rng rng(derive_seed(seed, trial));
    Graph g;
    switch (spec.kind) {
        case EnsembleKind::Uniform:
            g = sample_uniform(spec.n, rng);
            while (spec.connected_only && !connected(g)) g = sample_uniform(spec.n, rng);
            break;
        case EnsembleKind::Family:
            g = make_family(spec.family, spec.n, spec.regularity, rng);
            break;
        case EnsembleKind::IsomorphismClass:
            throw contract_error("ps_single_trial: class ensembles are record-driven");
    }
    Bipartition bp;
    if (spec.kind == EnsembleKind::Uniform) {
        bp = {spec.n, (std::uint64_t(1) << spec.n_a) - 1};
    } else {
        bp = {spec.n, random_subset(spec.n, spec.n_a, rng)};
    }
    return ea_graph_test(g, bp);
}

ExactProbability ps_exact(int n, int n_a, int threads) {
    if (n_a < 1 || n_a > n - 2) throw contract_error("ps_exact: require 1 <= n_a <= n-2");
    if ((n - n_a) % 2 != 0) throw contract_error("ps_exact: |B| must be even");
    return ps_exact_at(Bipartition{n, (std::uint64_t(1) << n_a) - 1}, threads);
}

ExactProbability ps_exact_at(const Bipartition& bp, int threads) {
    const int n = bp.n;
    if (n > 6) throw capability_error("ps_exact: exhaustive sweep capped at n = 6");
    if (bp.n_b() % 2 != 0) throw contract_error("ps_exact: |B| must be even");
    const int edges = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << edges;
    std::uint64_t solvable = 0;
    const int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(static) reduction(+ : solvable) num_threads(nthreads)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
        const Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
        if (ea_graph_test(g, bp)) ++solvable;
    }
    return {solvable, total};
}

EstimateResult ps_montecarlo(const EnsembleSpec& spec, std::uint64_t trials, std::uint64_t seed,
                             int threads) {
    spec.validate();
    if (spec.kind == EnsembleKind::IsomorphismClass) {
        if (spec.n <= 8) return class_enumeration(spec, seed);
        return record_sampling(spec, trials, seed, threads);
    }
    if (trials == 0) throw contract_error("ps_montecarlo: trials must be positive");
    std::vector<std::uint8_t> pass(trials, 0);
    const int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t)
        pass[t] = ps_single_trial(spec, seed, static_cast<std::uint64_t>(t)) ? 1 : 0;
    return estimate_from_flags(pass, spec, seed);
}

double ps_approx(double d_a, double d_b) { return (d_a + 1.0) / (d_a + d_b - 1.0); }

PsBounds ps_bounds(double d_a, double d_b, double r) {
    if (r <= 0.0 || r >= 1.0) throw contract_error("ps_bounds: r must lie in (0,1)");
    const double s = d_a + d_b - 1.0;
    const double eps1 = d_a * d_b * (d_a - 1.0) * (d_b - 1.0) / (r * r * (1.0 + r) * s * s * s);
    const double eps2 = (d_a - 1.0) * (d_b - 1.0) / (r * r * s * s * s);
    PsBounds out;
    out.lower = std::max(0.0, (d_a + 1.0) / ((1.0 + r) * s) - eps1);
    out.upper = std::min(1.0, (d_a + 1.0) / ((1.0 - r) * s) + eps2);
    return out;
}

}  // namespace entloc
