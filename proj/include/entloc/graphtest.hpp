#pragma once

#include <cstdint>
#include <string>

#include "entloc/graph.hpp"

namespace entloc {

enum class EnsembleKind { Uniform, IsomorphismClass, Family };

// A distribution over bipartitioned graph states. n_a == 0 selects the
// random-bipartition mode (uniform over nonempty A with even nonempty B),
// available for the isomorphism-class ensemble; fixed-|A| mode otherwise.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Uniform;
    int n = 0;
    int n_a = 0;
    FamilyKind family = FamilyKind::Path;
    int regularity = 0;          // k for k-regular families
    std::string graph6_path;     // record source for isomorphism classes
    bool connected_only = false;

    void validate() const;
    std::string describe() const;
};

struct EstimateResult {
    double estimate = 0;
    std::uint64_t trials = 0;
    double std_error = 0;  // sqrt(p(1-p)/trials), plug-in binomial
    std::uint64_t seed = 0;
    EnsembleSpec ensemble;
};

// Solvability of the cross-block equation: 1 iff gamma_and_d(g, bp) yields a
// consistent linear system over GF(2). Decides whether any measurement on A
// can leave B holding a maximal-tangle state. Throws on odd |B|.
bool ea_graph_test(const Graph& g, const Bipartition& bp);

struct ExactProbability {
    std::uint64_t solvable = 0;
    std::uint64_t total = 0;
    double value() const { return static_cast<double>(solvable) / static_cast<double>(total); }
};

// Exact pass fraction over all 2^{n(n-1)/2} graphs for the fixed bipartition
// A = {0..n_a-1}. The uniform edge measure is relabeling-invariant, so the
// result depends only on (n, n_a). Capability cap: n <= 6.
ExactProbability ps_exact(int n, int n_a, int threads = 0);

// Same sweep for an arbitrary fixed bipartition (used to validate the
// relabeling-invariance claim).
ExactProbability ps_exact_at(const Bipartition& bp, int threads = 0);

// One sampled (graph, bipartition) trial for the uniform and family
// ensembles, drawing from the seed stream of `trial`. Shared by the OpenMP
// estimator and the serial reference so both produce identical results.
bool ps_single_trial(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t trial);

// Monte Carlo estimate of the solvable fraction. Bit-reproducible for a
// given (spec, trials, seed) at any thread count: each trial draws from its
// own seed stream. For isomorphism-class ensembles with n <= 8 the estimate
// is instead computed exactly over deduplicated bipartition classes; with
// n > 8 it samples one random bipartition per graph record.
EstimateResult ps_montecarlo(const EnsembleSpec& spec, std::uint64_t trials, std::uint64_t seed,
                             int threads = 0);

// (d_A + 1) / (d_A + d_B - 1).
double ps_approx(double d_a, double d_b);

struct PsBounds {
    double lower = 0;
    double upper = 1;
};

// Two-sided solvable-probability bounds at accuracy parameter r in (0,1),
// clamped to [0,1]:
//   lower = (d_A+1)/((1+r)(d_A+d_B-1)) - dA dB (dA-1)(dB-1)/(r^2 (1+r)(dA+dB-1)^3)
//   upper = (d_A+1)/((1-r)(d_A+d_B-1)) + (dA-1)(dB-1)/(r^2 (dA+dB-1)^3)
PsBounds ps_bounds(double d_a, double d_b, double r);

}  // namespace entloc
