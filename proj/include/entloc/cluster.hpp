#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entloc/graph.hpp"

namespace entloc {

using BigInt = boost::multiprecision::cpp_int;

// Maximal runs of consecutive B-vertices along the path 0..n-1, as
// (start, length) pairs, sorted and separated by at least one A-vertex.
struct IslandDecomposition {
    std::vector<std::pair<int, int>> runs;

    int largest() const;
};

IslandDecomposition islands(const Bipartition& bp);

// Pauli-toolbox extraction criterion on the n-path: true iff the island
// multiset of B matches one of the admissible patterns — every island a
// 1-island; islands of size <= 2 with 2-islands only in the first and/or
// last position of the island sequence; or B being exactly one 3-island.
bool pauli_toolbox_extractable(const Bipartition& bp);

// Matrix-equation criterion on the n-path: true iff extraction is not
// excluded under arbitrary measurements on A with local unitaries on B.
// Requires even |B|.
bool matrix_test_line(const Bipartition& bp);

struct ClusterCensus {
    int n = 0;
    std::uint64_t s_count = 0;  // Pauli-toolbox impossible
    std::uint64_t t_count = 0;  // matrix-test impossible (subset of s)
    double ratio() const {
        return s_count == 0 ? 1.0 : static_cast<double>(t_count) / static_cast<double>(s_count);
    }
};

// Sweeps every configuration with nonempty A and nonempty even-size B,
// verifying t-membership implies s-membership along the way. Cap: n <= 20.
ClusterCensus census(int n, int threads = 0);

// Number of subsets of an n-path with no two adjacent vertices:
// f(n) = f(n-1) + f(n-2), f(0) = 1, f(1) = 2 (a shifted Fibonacci).
BigInt fib_f(int n);

// Counts B-masks on m consecutive vertices whose first and last islands are
// the 2-islands at the ends and whose islands never exceed size 2:
// g(m) = sum_{i=3}^{m-2} g(m-i) F_{i-2}, g(2) = 1, g(3) = g(4) = 0.
BigInt g_count(int m);

// Series coefficients of x^2 (1-x-x^2) / (1-x-x^2-x^3) up to degree max_m,
// by exact integer long division. Independent route to the same counts.
std::vector<BigInt> g_series(int max_m);

struct GrowthConstants {
    double phi;  // (1+sqrt(5))/2, growth of the 1-island counts
    double R;    // real root of 1 - x - x^2 - x^3 in (0,1)
    double a;    // 1/R, growth ceiling of the g sequence
};

GrowthConstants growth_constants();

}  // namespace entloc
