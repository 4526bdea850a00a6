#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entloc/errors.hpp"
#include "entloc/quantum.hpp"
#include "entloc/reference.hpp"
#include "entloc/rng.hpp"

using namespace entloc;

namespace {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

StateVector random_state(int n, Rng& rng) {
    StateVector s(n);
    for (auto& a : s.amp) a = cdouble(rng.normal(), rng.normal());
    s.normalize();
    return s;
}

double matrix_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("graph states carry the edge-parity signs") {
    const StateVector plus2 = build_graph_state(Graph(2));
    for (const auto& a : plus2.amp) CHECK(a.real() == doctest::Approx(0.5).epsilon(1e-12));

    Graph k2(2);
    k2.add_edge(0, 1);
    const StateVector s2 = build_graph_state(k2);
    CHECK(s2.amp[0].real() == doctest::Approx(0.5));
    CHECK(s2.amp[1].real() == doctest::Approx(0.5));
    CHECK(s2.amp[2].real() == doctest::Approx(0.5));
    CHECK(s2.amp[3].real() == doctest::Approx(-0.5));

    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    const StateVector s3 = build_graph_state(k3);
    for (std::uint64_t z = 0; z < 8; ++z) {
        const int e = static_cast<int>(((z >> 0) & (z >> 1) & 1) + ((z >> 0) & (z >> 2) & 1) +
                                       ((z >> 1) & (z >> 2) & 1));
        const double expect = (e % 2 ? -1.0 : 1.0) / std::sqrt(8.0);
        CHECK(s3.amp[z].real() == doctest::Approx(expect).epsilon(1e-12));
    }

    CHECK_THROWS_AS(build_graph_state(Graph(20)), capability_error);
}

TEST_CASE("sign accumulation matches gate-by-gate application") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(5));
        const Graph g = sample_uniform(n, rng);
        const StateVector fast = build_graph_state(g);
        const StateVector slow = ref::graph_state_by_gates(g);
        for (std::size_t i = 0; i < fast.dim(); ++i)
            CHECK(std::abs(fast.amp[i] - slow.amp[i]) < 1e-12);
    }
}

TEST_CASE("partial trace on the worked examples") {
    // |0>_A |+>_B with A = qubit 0.
    StateVector prod(2);
    prod.amp[0] = 1.0 / std::sqrt(2.0);
    prod.amp[2] = 1.0 / std::sqrt(2.0);
    const DensityMatrix plus = partial_trace(prod, 0b10);
    CHECK(plus.m(0, 0).real() == doctest::Approx(0.5));
    CHECK(plus.m(0, 1).real() == doctest::Approx(0.5));
    CHECK(plus.m(1, 0).real() == doctest::Approx(0.5));
    CHECK(plus.m(1, 1).real() == doctest::Approx(0.5));

    const DensityMatrix half = partial_trace(ghz_state(2), 0b01);
    CHECK(matrix_diff(half.m, 0.5 * Eigen::MatrixXcd::Identity(2, 2)) < 1e-12);

    const DensityMatrix ghz_marginal = partial_trace(ghz_state(3), 0b011);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
    expect(0, 0) = 0.5;
    expect(3, 3) = 0.5;
    CHECK(matrix_diff(ghz_marginal.m, expect) < 1e-12);

    CHECK_THROWS_AS(partial_trace(prod, 0), contract_error);
}

TEST_CASE("spin flip on states and operators") {
    // |0> -> i|1>
    const StateVector flipped0 = spin_flip(basis_state(1, 0));
    CHECK(std::abs(flipped0.amp[0]) < 1e-15);
    CHECK(std::abs(flipped0.amp[1] - cdouble(0, 1)) < 1e-15);

    // |0><0| -> |1><1|
    const DensityMatrix rho0 = DensityMatrix::pure(basis_state(1, 0));
    const DensityMatrix rho1 = spin_flip(rho0);
    CHECK(rho1.m(1, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho1.m(0, 0)) < 1e-15);

    // The two-qubit maximally entangled state picks up a global minus.
    StateVector bell(2);
    bell.amp[0] = bell.amp[3] = 1.0 / std::sqrt(2.0);
    const StateVector bell_flipped = spin_flip(bell);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(bell_flipped.amp[i] + bell.amp[i]) < 1e-15);

    // Maximally mixed operators are fixed points.
    for (int k = 1; k <= 3; ++k) {
        DensityMatrix mixed;
        mixed.m = Eigen::MatrixXcd::Identity(1 << k, 1 << k) / static_cast<double>(1 << k);
        CHECK(matrix_diff(spin_flip(mixed).m, mixed.m) < 1e-15);
    }
}

TEST_CASE("spin flip is an involution on density matrices") {
    Rng rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(4));
        const StateVector psi = random_state(n, rng);
        const DensityMatrix rho = partial_trace(psi, (std::uint64_t(1) << (n - 1)) - 1);
        CHECK(matrix_diff(spin_flip(spin_flip(rho)).m, rho.m) < 1e-12);
    }
}

TEST_CASE("tangle values of the named states") {
    for (int n = 2; n <= 8; n += 2) CHECK(n_tangle(ghz_state(n)) == doctest::Approx(1.0));
    CHECK(n_tangle(w_state(4)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(n_tangle(basis_state(2, 0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("tangle is phase invariant and matches the materialized route") {
    Rng rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_int(6));
        const StateVector psi = random_state(n, rng);
        CHECK(n_tangle(psi) == doctest::Approx(ref::n_tangle_materialized(psi)).epsilon(1e-12));

        const double theta = rng.uniform() * 6.283185307179586;
        StateVector rotated = psi;
        for (auto& a : rotated.amp) a *= std::polar(1.0, theta);
        CHECK(n_tangle(rotated) == doctest::Approx(n_tangle(psi)).epsilon(1e-12));
    }
}

TEST_CASE("fidelity on the worked examples") {
    Rng rng(34);
    const StateVector psi = random_state(3, rng);
    const DensityMatrix rho = partial_trace(psi, 0b011);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0));

    const DensityMatrix zero = DensityMatrix::pure(basis_state(1, 0));
    const DensityMatrix one = DensityMatrix::pure(basis_state(1, 1));
    CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

    DensityMatrix mixed;
    mixed.m = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
    CHECK(fidelity(zero, mixed) == doctest::Approx(1.0 / std::sqrt(2.0)));

    DensityMatrix small;
    small.m = Eigen::MatrixXcd::Identity(2, 2);
    DensityMatrix big;
    big.m = Eigen::MatrixXcd::Identity(4, 4);
    CHECK_THROWS_AS(fidelity(small, big), contract_error);
}

TEST_CASE("fidelity is symmetric on random marginals") {
    Rng rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_int(3));
        const int keep = 2 + static_cast<int>(rng.uniform_int(3));
        if (keep >= n) continue;
        const DensityMatrix a = partial_trace(random_state(n, rng), (std::uint64_t(1) << keep) - 1);
        const DensityMatrix b = partial_trace(random_state(n, rng), (std::uint64_t(1) << keep) - 1);
        CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(1e-10));
    }
}

TEST_CASE("trace ratio dichotomy on graph-state marginals") {
    // Single-qubit marginal of the two-qubit graph state is maximally mixed.
    Graph k2(2);
    k2.add_edge(0, 1);
    const DensityMatrix half = partial_trace(build_graph_state(k2), 0b01);
    CHECK(trace_ratio(half) == doctest::Approx(1.0));

    CHECK(trace_ratio(DensityMatrix::pure(basis_state(2, 0))) == doctest::Approx(0.0).epsilon(1e-12));

    // Exhaustive: all 3-vertex graphs with one measured qubit.
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        const Graph g = graph_from_edge_mask(3, mask);
        const DensityMatrix rho = partial_trace(build_graph_state(g), 0b110);
        const double value = trace_ratio(rho);
        const bool near01 = std::abs(value) < 1e-9 || std::abs(value - 1.0) < 1e-9;
        CHECK(near01);
    }

    // All graphs, all even-|B| bipartitions up to four vertices.
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t graphs = std::uint64_t(1) << (n * (n - 1) / 2);
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            const StateVector psi = build_graph_state(graph_from_edge_mask(n, mask));
            for (std::uint64_t a_mask = 0; a_mask < full; ++a_mask) {
                const int nb = n - std::popcount(a_mask);
                if (nb < 2 || nb % 2 != 0) continue;
                const Bipartition bp{n, a_mask};
                const double value = trace_ratio(partial_trace(psi, bp.b_mask()));
                CHECK((std::abs(value) < 1e-9 || std::abs(value - 1.0) < 1e-9));
            }
        }
    }
}

TEST_CASE("ensemble means of overlap and purity at one point") {
    // n = 3, n_a = 1: closed forms (d_A+1)/(d_A d_B) and (d_A+d_B-1)/(d_A d_B).
    double sum_overlap = 0, sum_purity = 0;
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        const StateVector psi = build_graph_state(graph_from_edge_mask(3, mask));
        const DensityMatrix rho = partial_trace(psi, 0b110);
        sum_overlap += (rho.m * spin_flip(rho).m).trace().real();
        sum_purity += rho.m.squaredNorm();
    }
    CHECK(sum_overlap / 8.0 == doctest::Approx(3.0 / 8.0).epsilon(1e-13));
    CHECK(sum_purity / 8.0 == doctest::Approx(5.0 / 8.0).epsilon(1e-13));
}
