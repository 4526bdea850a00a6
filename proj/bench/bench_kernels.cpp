// Wall-clock comparison of the OpenMP kernels against their serial
// references. Also asserts that both sides agree, since a fast wrong answer
// would make the numbers meaningless.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "entloc/cluster.hpp"
#include "entloc/experiments.hpp"
#include "entloc/graphtest.hpp"
#include "entloc/reference.hpp"

using namespace entloc;

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    {
        EnsembleSpec spec;
        spec.kind = EnsembleKind::Uniform;
        spec.n = 20;
        spec.n_a = 10;
        const std::uint64_t trials = 100000;
        EstimateResult serial_res, parallel_res;
        const double ts = time_seconds([&] { serial_res = ref::ps_montecarlo_serial(spec, trials, 7); });
        const double tp = time_seconds([&] { parallel_res = ps_montecarlo(spec, trials, 7); });
        if (serial_res.estimate != parallel_res.estimate) {
            std::fprintf(stderr, "ps_montecarlo: serial and parallel estimates disagree\n");
            return 1;
        }
        report("ps_montecarlo n=20 na=10", ts, tp);
    }
    {
        ClusterCensus serial_res{}, parallel_res{};
        const double ts = time_seconds([&] { serial_res = ref::census_serial(19); });
        const double tp = time_seconds([&] { parallel_res = census(19); });
        if (serial_res.s_count != parallel_res.s_count || serial_res.t_count != parallel_res.t_count) {
            std::fprintf(stderr, "census: serial and parallel counts disagree\n");
            return 1;
        }
        report("census n=19", ts, tp);
    }
    {
        ExactProbability serial_res{}, parallel_res{};
        const double ts = time_seconds([&] { serial_res = ref::ps_exact_serial(6, 2); });
        const double tp = time_seconds([&] { parallel_res = ps_exact(6, 2); });
        if (serial_res.solvable != parallel_res.solvable) {
            std::fprintf(stderr, "ps_exact: serial and parallel counts disagree\n");
            return 1;
        }
        report("ps_exact n=6 na=2", ts, tp);
    }
    {
        OracleSweepResult r1{}, r2{};
        const double ts = time_seconds([&] { r1 = oracle_equivalence_sweep(5, 1); });
        const double tp = time_seconds([&] { r2 = oracle_equivalence_sweep(5, 0); });
        if (r1.mismatches != r2.mismatches || r1.checked != r2.checked) {
            std::fprintf(stderr, "oracle sweep: serial and parallel results disagree\n");
            return 1;
        }
        report("oracle sweep n=5", ts, tp);
    }
    return 0;
}
