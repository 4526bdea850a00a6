#include "entloc/cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entloc/errors.hpp"
#include "entloc/graphtest.hpp"

namespace entloc {

int IslandDecomposition::largest() const {
    int m = 0;
    for (const auto& [start, len] : runs) m = std::max(m, len);
    return m;
}

IslandDecomposition islands(const Bipartition& bp) {
    IslandDecomposition out;
    const std::uint64_t b = bp.b_mask();
    int i = 0;
    while (i < bp.n) {
        if (!((b >> i) & 1)) {
            ++i;
            continue;
        }
        const int start = i;
        while (i < bp.n && ((b >> i) & 1)) ++i;
        out.runs.emplace_back(start, i - start);
    }
    return out;
}

bool pauli_toolbox_extractable(const Bipartition& bp) {
    const IslandDecomposition dec = islands(bp);
    if (dec.runs.empty()) return true;  // vacuous: nothing to extract onto
    if (dec.runs.size() == 1 && dec.runs[0].second == 3) return true;
    // Otherwise islands may not exceed size 2, and 2-islands are admissible
    // only as the first and/or last island of the sequence.
    for (std::size_t k = 0; k < dec.runs.size(); ++k) {
        const int len = dec.runs[k].second;
        if (len > 2) return false;
        if (len == 2 && k != 0 && k + 1 != dec.runs.size()) return false;
    }
    return true;
}

bool matrix_test_line(const Bipartition& bp) {
    if (bp.n_b() % 2 != 0) throw contract_error("matrix_test_line: |B| must be even");
    Rng unused(0);
    const Graph path = make_family(FamilyKind::Path, bp.n, 0, unused);
    return ea_graph_test(path, bp);
}

ClusterCensus census(int n, int threads) {
    if (n < 2) throw contract_error("census: n must be >= 2");
    if (n > 20) throw capability_error("census: sweep capped at n = 20");
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)threads;
#endif
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::uint64_t s_count = 0, t_count = 0, violations = 0;
#pragma omp parallel for schedule(static) reduction(+ : s_count, t_count, violations) \
    num_threads(nthreads)
    for (std::int64_t a_mask = 1; a_mask < static_cast<std::int64_t>(full); ++a_mask) {
        const int nb = n - std::popcount(static_cast<std::uint64_t>(a_mask));
        if (nb == 0 || nb % 2 != 0) continue;
        const Bipartition bp{n, static_cast<std::uint64_t>(a_mask)};
        const bool toolbox_possible = pauli_toolbox_extractable(bp);
        const bool solvable = matrix_test_line(bp);
        if (!toolbox_possible) ++s_count;
        if (!solvable) {
            ++t_count;
            if (toolbox_possible) ++violations;  // would contradict t <= s
        }
    }
    if (violations != 0)
        throw std::logic_error("census: matrix-test-impossible configuration marked extractable");
    ClusterCensus out;
    out.n = n;
    out.s_count = s_count;
    out.t_count = t_count;
    return out;
}

BigInt fib_f(int n) {
    if (n < 0) throw contract_error("fib_f: n must be nonnegative");
    BigInt prev = 1, cur = 2;  // f(0), f(1)
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt g_count(int m) {
    if (m < 2) throw contract_error("g_count: m must be >= 2");
    std::vector<BigInt> g(static_cast<std::size_t>(m) + 1, 0);
    g[2] = 1;  // g(3) = g(4) = 0 already
    // Fibonacci values F_1.. on demand for the convolution weights.
    std::vector<BigInt> fib = {0, 1, 1};
    auto fibonacci = [&fib](int k) -> const BigInt& {
        while (static_cast<int>(fib.size()) <= k) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        return fib[static_cast<std::size_t>(k)];
    };
    for (int mm = 5; mm <= m; ++mm) {
        BigInt acc = 0;
        for (int i = 3; i <= mm - 2; ++i) acc += g[static_cast<std::size_t>(mm - i)] * fibonacci(i - 2);
        g[static_cast<std::size_t>(mm)] = std::move(acc);
    }
    return g[static_cast<std::size_t>(m)];
}

std::vector<BigInt> g_series(int max_m) {
    if (max_m < 0) throw contract_error("g_series: max_m must be nonnegative");
    // (1 - x - x^2 - x^3) S(x) = x^2 - x^3 - x^4 solved coefficientwise.
    std::vector<BigInt> c(static_cast<std::size_t>(max_m) + 1, 0);
    auto numer = [](int k) -> int { return k == 2 ? 1 : (k == 3 || k == 4) ? -1 : 0; };
    for (int k = 0; k <= max_m; ++k) {
        BigInt v = numer(k);
        if (k >= 1) v += c[static_cast<std::size_t>(k - 1)];
        if (k >= 2) v += c[static_cast<std::size_t>(k - 2)];
        if (k >= 3) v += c[static_cast<std::size_t>(k - 3)];
        c[static_cast<std::size_t>(k)] = std::move(v);
    }
    return c;
}

GrowthConstants growth_constants() {
    GrowthConstants out;
    out.phi = (1.0 + std::sqrt(5.0)) / 2.0;
    // 1 - x - x^2 - x^3 is positive at 0 and negative at 1; bisect the root.
    double lo = 0.0, hi = 1.0;
    auto p = [](double x) { return 1.0 - x - x * x - x * x * x; };
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    out.R = 0.5 * (lo + hi);
    out.a = 1.0 / out.R;
    return out;
}

}  // namespace entloc
