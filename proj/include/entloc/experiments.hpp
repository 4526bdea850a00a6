#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entloc/graphtest.hpp"
#include "entloc/localization.hpp"

namespace entloc {

// Tabular experiment output. Cells are preformatted strings so that a table
// rendered twice is identical byte for byte.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_json() const;
};

// Doubles are rendered with 12 significant digits and a '.' decimal point.
std::string format_value(double v);

// Echo of a run sufficient to reproduce it exactly; serialized alongside
// every output artifact.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string version;
    double duration_seconds = 0;

    std::string to_json() const;
};

struct PsRunConfig {
    EnsembleSpec spec;             // n and ensemble settings; n_a ignored
    std::vector<int> n_a_values;   // one output row per value
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    double r = 0.5;                // accuracy knob for the printed bounds
    int threads = 0;
};

// Rows: n, n_a, trials, p_hat, stderr, approx, lower, upper.
Table run_ps(const PsRunConfig& cfg);

struct HaarScanConfig {
    std::vector<int> n_a_values;
    int n_b = 2;
    int samples = 1000;
    std::uint64_t seed = 0;
    bool with_le = false;
    OptimizerConfig optimizer;
    int threads = 0;
};

// Rows: n_a, n_b, mean_ea, std_ea, mean_le, std_le, k, ea_floor. The LE
// columns are empty unless with_le is set (LE is the expensive column).
Table run_haar_scan(const HaarScanConfig& cfg);

// Rows: n, s_count, t_count, ratio, f, g_series_check for n in [n_from, n_to].
Table run_cluster(int n_from, int n_to, int threads = 0);

struct VerifyItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_passed() const;
};

// Release-gate checks: the GF(2) test against the dense fidelity oracle for
// every graph up to max_n, and the closed-form ensemble expectations.
VerifyReport run_verify(int max_n = 6, int threads = 0);

// Underlying sweeps, exposed for the acceptance suite.
struct OracleSweepResult {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    double worst_rounding = 0;  // largest |fidelity - nearest of {0,1}| seen
};
OracleSweepResult oracle_equivalence_sweep(int n, int threads = 0);

struct EnsembleMoments {
    double mean_overlap = 0;  // mean Tr[rho rho~] over the full ensemble
    double mean_purity = 0;   // mean Tr[rho^2]
};
EnsembleMoments ensemble_moments(int n, int n_a, int threads = 0);

}  // namespace entloc
