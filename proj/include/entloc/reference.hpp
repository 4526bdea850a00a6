#pragma once

#include <cstdint>
#include <optional>

#include "entloc/cluster.hpp"
#include "entloc/gf2.hpp"
#include "entloc/graph.hpp"
#include "entloc/graphtest.hpp"
#include "entloc/quantum.hpp"

// Serial and naive reference implementations. These stay deliberately
// simple-minded: the tests pit them against the production kernels, and the
// benchmark measures what the bit-packed/OpenMP paths buy.
namespace entloc::ref {

// Rank by elimination on a plain integer matrix reduced mod 2.
int gf2_rank_naive(const Gf2Matrix& m);

// Solvability decided by trying every x in {0,1}^cols; cols <= 24.
bool gf2_solvable_bruteforce(const Gf2Matrix& m, const Gf2Vector& d);

// Graph state built by explicit gate application: start in the uniform
// superposition, apply one controlled phase per edge.
StateVector graph_state_by_gates(const Graph& g);

// Overlap with the flipped state computed by materializing the flipped
// vector first.
double n_tangle_materialized(const StateVector& s);

// Serial twins of the OpenMP kernels; identical results by construction
// (same per-trial seed schedule, same sweep order).
ExactProbability ps_exact_serial(int n, int n_a);
EstimateResult ps_montecarlo_serial(const EnsembleSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed);
ClusterCensus census_serial(int n);

// Brute-force counts behind the path recurrences.
std::uint64_t independent_subset_count(int n);
std::uint64_t end_anchored_island_count(int m);

}  // namespace entloc::ref
