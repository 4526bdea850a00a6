#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entloc/quantum.hpp"
#include "entloc/rng.hpp"

namespace entloc {

// Orthonormal single-qubit pair {|v>, |v_perp>} with
// |v> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct SingleQubitBasis {
    double theta = 0;  // [0, pi]
    double phi = 0;    // [0, 2 pi)

    std::array<cdouble, 2> primary() const;
    std::array<cdouble, 2> orthogonal() const;
};

// Ordered product basis of the measured subsystem: one single-qubit basis
// per qubit of A (ascending index). Element i picks, on qubit k of A, the
// primary vector when bit k of i is 0 and the orthogonal one when it is 1.
struct ProductBasis {
    std::vector<SingleQubitBasis> per_qubit;

    int n_qubits() const { return static_cast<int>(per_qubit.size()); }
    std::uint64_t dim() const { return std::uint64_t(1) << per_qubit.size(); }
    StateVector element(std::uint64_t i) const;
};

// Ordered orthonormal basis given by the columns of a unitary.
struct GlobalBasis {
    Eigen::MatrixXcd u;

    int dim() const { return static_cast<int>(u.cols()); }
    StateVector element(std::uint64_t i) const;
};

struct OptimizerConfig {
    int restarts = 10;
    int max_evals = 2000;
    double tol = 1e-7;
    std::uint64_t seed = 0;

    void validate() const;
};

// Normalized vector of 2^n independent standard complex Gaussian draws;
// distributed uniformly under the unitarily invariant measure.
StateVector haar_state(int n_qubits, Rng& rng, int qubit_cap = kStateQubitCap);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// R-diagonal phase correction.
GlobalBasis haar_basis(int dim, Rng& rng);

struct PostMeasurement {
    double prob = 0;
    // Unset when prob < 1e-14; callers treat that branch as contributing zero.
    std::optional<StateVector> state;
};

inline constexpr double kBranchProbFloor = 1e-14;

// Projects psi onto |v> on the A side; returns the outcome probability and
// the normalized residual state on B.
PostMeasurement post_measurement(const StateVector& psi, const Bipartition& bp,
                                 const StateVector& v);

// p_v * tangle(M_v); exactly zero below the probability floor.
double branch_tangle(const StateVector& psi, const Bipartition& bp, const StateVector& v);

// Average post-measurement tangle: sum of branch_tangle over all basis
// elements of the measured side.
double avg_tangle(const StateVector& psi, const Bipartition& bp, const ProductBasis& basis);
double avg_tangle(const StateVector& psi, const Bipartition& bp, const GlobalBasis& basis);

// Entanglement of assistance: the fidelity of the B-marginal with its spin
// flip. Exact and optimization-free.
double ea(const StateVector& psi, const Bipartition& bp);
double ea_from_marginal(const DensityMatrix& rho);

// Localizable entanglement lower bound: the best average tangle found by
// multi-start derivative-free search over the 2*N_A basis angles. The result
// is achieved by a concrete product basis, hence never exceeds the true
// supremum.
double le(const StateVector& psi, const Bipartition& bp, const OptimizerConfig& cfg);

// Basis distance: max over ordered index pairs of the trace distance
// 2 sqrt(1 - |<phi_i|eta_i>|^2) between matched elements.
double basis_norm(const ProductBasis& beta, const ProductBasis& gamma);
double basis_norm(const GlobalBasis& beta, const GlobalBasis& gamma);

// sqrt(2 / (d_B + 1)): the ceiling that typical localized tangle values
// concentrate under for large measured subsystems.
double k_constant(std::uint64_t d_b);

// The three printed tail-bound right-hand sides, evaluated in log domain.
enum class TailBound {
    EaUpperTail,   // EA >= K + eps, state-net bound
    LeUpperTail,   // LE >= K + eps, product-basis-net bound
    EaExpTail,     // 2 exp(-C dA dB eps^2), prefactor C exposed
};

double concentration_rhs(TailBound bound, double d_a, double d_b, double n_a, double eps,
                         double c = 1.0);

}  // namespace entloc
