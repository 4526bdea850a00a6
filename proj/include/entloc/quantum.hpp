#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "entloc/graph.hpp"

namespace entloc {

using cdouble = std::complex<double>;

// Dense pure state over n qubits, little-endian ordering: qubit 0 is the
// least significant bit of the amplitude index. This convention is fixed
// globally; every bipartition mask is interpreted against it.
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amp;

    StateVector() = default;
    explicit StateVector(int n) : n_qubits(n), amp(std::size_t(1) << n, cdouble(0, 0)) {}

    std::size_t dim() const { return amp.size(); }
    double norm() const;
    void normalize();
};

// Hermitian PSD unit-trace operator over a power-of-two dimension.
struct DensityMatrix {
    Eigen::MatrixXcd m;

    int dim() const { return static_cast<int>(m.rows()); }
    static DensityMatrix pure(const StateVector& s);
};

inline constexpr int kStateQubitCap = 14;    // 2^14 complex amplitudes
inline constexpr int kDensityQubitCap = 10;  // 1024 x 1024 operators

// Graph state: all CZ phases accumulated directly into basis-state signs:
// amp(z) = 2^{-n/2} * (-1)^{#edges inside the support of z}.
StateVector build_graph_state(const Graph& g, int qubit_cap = kStateQubitCap);

StateVector ghz_state(int n);
StateVector w_state(int n);
StateVector basis_state(int n, std::uint64_t index);

// Reduced state on the qubits of keep_mask, index order preserved ascending.
DensityMatrix partial_trace(const StateVector& s, std::uint64_t keep_mask);

// Complex conjugation in the computational basis followed by sigma_y on
// every qubit.
StateVector spin_flip(const StateVector& s);
DensityMatrix spin_flip(const DensityMatrix& rho);

// The same conjugation applied entrywise to an arbitrary square matrix over
// a power-of-two dimension; it commutes with real-coefficient matrix
// functions such as the square root.
Eigen::MatrixXcd spin_flip_matrix(const Eigen::MatrixXcd& m);

// Principal square root of a Hermitian PSD matrix with a relative dust
// floor on the spectrum.
Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& h);

// |<psi|psi~>|, evaluated by index pairing without materializing the
// flipped vector.
double n_tangle(const StateVector& s);

// Square-root fidelity Tr[sqrt(sqrt(rho) sigma sqrt(rho))] via Hermitian
// eigendecompositions; eigenvalues in [-1e-9, 0) are clamped to zero.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr[rho * spin_flip(rho)] / Tr[rho^2]; the imaginary part of the numerator
// must vanish to 1e-10.
double trace_ratio(const DensityMatrix& rho);

}  // namespace entloc
