// Experiment workbench for entanglement localization on multi-qubit states.
// Subcommands compute the tangle of named states, run the GF(2) graph-state
// test, estimate solvable-fraction curves over graph ensembles, scan
// Haar-random states, sweep linear-cluster extraction censuses, and verify
// the library against its dense oracles.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "entloc/cluster.hpp"
#include "entloc/errors.hpp"
#include "entloc/experiments.hpp"
#include "entloc/graphtest.hpp"
#include "entloc/localization.hpp"
#include "entloc/version.hpp"

using namespace entloc;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ENTLOC_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw contract_error(std::string(what) + ": not an integer: '" + text + "'");
    }
}

// "2,4,6" or "2:8" (inclusive range, step 1) or "2:8:2".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.find(':') != std::string::npos) {
        int lo = 0, hi = 0, step = 1;
        if (std::sscanf(text.c_str(), "%d:%d:%d", &lo, &hi, &step) < 2)
            throw contract_error("malformed range: '" + text + "'");
        if (step <= 0) throw contract_error("range step must be positive");
        for (int v = lo; v <= hi; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "list entry"));
    if (out.empty()) throw contract_error("empty integer list");
    return out;
}

StateVector state_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open state file: " + path);
    int n = 0;
    if (!(in >> n) || n < 1 || n > kStateQubitCap) throw input_error("state file: bad qubit count");
    StateVector s(n);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        double re = 0, im = 0;
        if (!(in >> re >> im)) throw input_error("state file: missing amplitude " + std::to_string(i));
        s.amp[i] = cdouble(re, im);
    }
    if (std::abs(s.norm() - 1.0) > 1e-10) throw input_error("state file: state is not normalized");
    return s;
}

StateVector parse_state_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw contract_error("state spec must look like kind:arg");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "ghz") return ghz_state(parse_int(arg, "ghz qubit count"));
    if (kind == "w") return w_state(parse_int(arg, "w qubit count"));
    if (kind == "graph6") return build_graph_state(parse_graph6(arg));
    if (kind == "file") return state_from_file(arg);
    throw contract_error("unknown state spec kind: " + kind);
}

EnsembleSpec parse_ensemble(const std::string& text, int n, const std::string& graph6_file,
                            bool connected_only) {
    EnsembleSpec spec;
    spec.n = n;
    spec.connected_only = connected_only;
    spec.graph6_path = graph6_file;
    if (text == "uniform") {
        spec.kind = EnsembleKind::Uniform;
    } else if (text == "isom") {
        spec.kind = EnsembleKind::IsomorphismClass;
    } else if (text.rfind("family:", 0) == 0) {
        spec.kind = EnsembleKind::Family;
        const std::string fam = text.substr(7);
        if (fam == "path")
            spec.family = FamilyKind::Path;
        else if (fam == "cycle")
            spec.family = FamilyKind::Cycle;
        else if (fam == "complete")
            spec.family = FamilyKind::Complete;
        else if (fam.rfind("regular", 0) == 0) {
            spec.family = FamilyKind::RegularRandom;
            spec.regularity = parse_int(fam.substr(7), "regularity");
        } else {
            throw contract_error("unknown family: " + fam);
        }
    } else {
        throw contract_error("unknown ensemble: " + text);
    }
    return spec;
}

// Writes the table (and its manifest) to the output path, or the table alone
// to stdout when no path was given.
void emit(const Table& table, const std::string& format, const std::string& output,
          RunManifest manifest, std::chrono::steady_clock::time_point started) {
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const std::string body = (format == "json") ? table.to_json() : table.to_csv();
    if (output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(output);
    if (!out) throw input_error("cannot write output file: " + output);
    out << body;
    std::ofstream mout(output + ".manifest.json");
    if (!mout) throw input_error("cannot write manifest for: " + output);
    mout << manifest.to_json();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement localization workbench"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "csv";
    std::string output;
    int threads = 0;
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output, "write results here (manifest written alongside)");
    app.add_option("--threads", threads, "worker threads; 0 = all cores");

    // tangle
    auto* cmd_tangle = app.add_subcommand("tangle", "tangle of a named state");
    std::string state_spec;
    cmd_tangle->add_option("state", state_spec, "ghz:n | w:n | graph6:<record> | file:<path>")
        ->required();

    // test-graph
    auto* cmd_test = app.add_subcommand("test-graph", "GF(2) matrix test for one graph state");
    std::string record;
    std::uint64_t a_mask = 0;
    cmd_test->add_option("graph6", record, "graph6 record of the underlying graph")->required();
    cmd_test->add_option("--a-mask", a_mask, "bitmask of measured (A) vertices, 0-indexed")
        ->required();

    // ps
    auto* cmd_ps = app.add_subcommand("ps", "solvable fraction over a graph ensemble");
    std::string ensemble = "uniform";
    std::string graph6_file;
    std::string na_list;
    int ps_n = 10;
    std::uint64_t trials = 1000;
    std::uint64_t seed = default_seed();
    double r = 0.5;
    bool connected_only = false;
    cmd_ps->add_option("--ensemble", ensemble, "uniform | isom | family:<kind>");
    cmd_ps->add_option("--n", ps_n, "total vertex count")->required();
    cmd_ps->add_option("--na", na_list, "measured-side sizes, list or range")->required();
    cmd_ps->add_option("--trials", trials, "samples per row");
    cmd_ps->add_option("--seed", seed, "master seed");
    cmd_ps->add_option("--r", r, "accuracy knob for the printed bounds");
    cmd_ps->add_option("--graph6-file", graph6_file, "record source for isom ensembles");
    cmd_ps->add_flag("--connected-only", connected_only, "restrict to connected graphs");

    // haar-scan
    auto* cmd_haar = app.add_subcommand("haar-scan", "mean EA/LE across Haar-random states");
    std::string na_range;
    int nb = 2;
    int samples = 1000;
    std::uint64_t haar_seed = default_seed();
    bool with_le = false;
    int restarts = 10;
    int max_evals = 2000;
    cmd_haar->add_option("--na-range", na_range, "measured-side sizes, list or range")->required();
    cmd_haar->add_option("--nb", nb, "target-side qubit count (even)");
    cmd_haar->add_option("--samples", samples, "states per row");
    cmd_haar->add_option("--seed", haar_seed, "master seed");
    cmd_haar->add_flag("--with-le", with_le, "also optimize LE (expensive)");
    cmd_haar->add_option("--restarts", restarts, "LE optimizer restarts");
    cmd_haar->add_option("--max-evals", max_evals, "LE objective evaluations per restart");

    // cluster
    auto* cmd_cluster = app.add_subcommand("cluster", "linear-cluster extraction census");
    std::string n_range = "4:16";
    cmd_cluster->add_option("--n-range", n_range, "path lengths, list or range");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the oracle-equivalence release gate");
    int verify_n = 6;
    cmd_verify->add_option("--max-n", verify_n, "largest vertex count in the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (cmd_tangle->parsed()) {
            const StateVector s = parse_state_spec(state_spec);
            std::cout << format_value(n_tangle(s)) << "\n";
            return 0;
        }
        if (cmd_test->parsed()) {
            const Graph g = parse_graph6(record);
            const Bipartition bp{g.num_vertices(), a_mask};
            if (bp.n_b() % 2 != 0) {
                std::cerr << "test-graph: |B| = " << bp.n_b()
                          << " is odd; the tangle criterion needs an even target side\n";
                return kExitUsage;
            }
            const auto [gamma, d] = gamma_and_d(g, bp);
            const auto witness = gf2_solve(gamma, d);
            std::cout << (witness ? 1 : 0) << "\n";
            if (witness) {
                std::string bits;
                for (int i = 0; i < witness->len(); ++i) bits += witness->get(i) ? '1' : '0';
                std::cout << "witness=" << bits << "\n";
            }
            return 0;
        }
        if (cmd_ps->parsed()) {
            PsRunConfig cfg;
            cfg.spec = parse_ensemble(ensemble, ps_n, graph6_file, connected_only);
            cfg.n_a_values = parse_int_list(na_list);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.r = r;
            cfg.threads = threads;
            RunManifest m{"ps",
                          {{"ensemble", ensemble},
                           {"n", std::to_string(ps_n)},
                           {"na", na_list},
                           {"trials", std::to_string(trials)},
                           {"r", format_value(r)},
                           {"connected_only", connected_only ? "1" : "0"},
                           {"graph6_file", graph6_file},
                           {"threads", std::to_string(threads)}},
                          seed,
                          kVersion};
            emit(run_ps(cfg), format, output, std::move(m), started);
            return 0;
        }
        if (cmd_haar->parsed()) {
            HaarScanConfig cfg;
            cfg.n_a_values = parse_int_list(na_range);
            cfg.n_b = nb;
            cfg.samples = samples;
            cfg.seed = haar_seed;
            cfg.with_le = with_le;
            cfg.optimizer.restarts = restarts;
            cfg.optimizer.max_evals = max_evals;
            cfg.threads = threads;
            RunManifest m{"haar-scan",
                          {{"na", na_range},
                           {"nb", std::to_string(nb)},
                           {"samples", std::to_string(samples)},
                           {"with_le", with_le ? "1" : "0"},
                           {"restarts", std::to_string(restarts)},
                           {"max_evals", std::to_string(max_evals)},
                           {"threads", std::to_string(threads)}},
                          haar_seed,
                          kVersion};
            emit(run_haar_scan(cfg), format, output, std::move(m), started);
            return 0;
        }
        if (cmd_cluster->parsed()) {
            const std::vector<int> ns = parse_int_list(n_range);
            RunManifest m{"cluster", {{"n_range", n_range}, {"threads", std::to_string(threads)}},
                          0, kVersion};
            emit(run_cluster(ns.front(), ns.back(), threads), format, output, std::move(m), started);
            return 0;
        }
        if (cmd_verify->parsed()) {
            const VerifyReport report = run_verify(verify_n, threads);
            for (const VerifyItem& item : report.items)
                std::cout << (item.passed ? "PASS " : "FAIL ") << item.name << " (" << item.detail
                          << ")\n";
            return report.all_passed() ? 0 : kExitVerifyFailure;
        }
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
