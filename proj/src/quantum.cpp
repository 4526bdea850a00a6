#include "entloc/quantum.hpp"

#include <bit>
#include <cmath>

#include "entloc/errors.hpp"

namespace entloc {

namespace {

// i^n for n mod 4.
cdouble i_pow(int n) {
    switch (n & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

int popcount64(std::uint64_t x) { return std::popcount(x); }

// Deposit the bits of `value` into the positions set in `mask`.
std::uint64_t deposit_bits(std::uint64_t value, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
        const std::uint64_t low = mask & -mask;
        if (value & 1) out |= low;
        value >>= 1;
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

double StateVector::norm() const {
    double s = 0;
    for (const cdouble& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double nrm = norm();
    if (nrm <= 0) throw contract_error("StateVector: cannot normalize zero vector");
    for (cdouble& a : amp) a /= nrm;
}

DensityMatrix DensityMatrix::pure(const StateVector& s) {
    const int d = static_cast<int>(s.dim());
    DensityMatrix rho;
    rho.m.resize(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho.m(i, j) = s.amp[i] * std::conj(s.amp[j]);
    return rho;
}

StateVector build_graph_state(const Graph& g, int qubit_cap) {
    const int n = g.num_vertices();
    if (n > qubit_cap) throw capability_error("build_graph_state: vertex count exceeds qubit cap");
    StateVector s(n);
    const double scale = std::pow(2.0, -0.5 * n);
    const std::uint64_t dim = std::uint64_t(1) << n;
    for (std::uint64_t z = 0; z < dim; ++z) {
        // Parity of the number of edges with both endpoints set in z.
        int parity = 0;
        std::uint64_t v = z;
        while (v) {
            const int i = std::countr_zero(v);
            v &= v - 1;
            parity ^= popcount64(g.neighbors_in(i, z & ((std::uint64_t(1) << i) - 1))) & 1;
        }
        s.amp[z] = parity ? -scale : scale;
    }
    return s;
}

StateVector ghz_state(int n) {
    if (n < 1 || n > kStateQubitCap) throw capability_error("ghz_state: bad qubit count");
    StateVector s(n);
    const double r = 1.0 / std::sqrt(2.0);
    s.amp[0] = r;
    s.amp[s.dim() - 1] = r;
    return s;
}

StateVector w_state(int n) {
    if (n < 1 || n > kStateQubitCap) throw capability_error("w_state: bad qubit count");
    StateVector s(n);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) s.amp[std::uint64_t(1) << k] = r;
    return s;
}

StateVector basis_state(int n, std::uint64_t index) {
    StateVector s(n);
    s.amp[index] = 1.0;
    return s;
}

DensityMatrix partial_trace(const StateVector& s, std::uint64_t keep_mask) {
    const int n = s.n_qubits;
    const std::uint64_t full = (n >= 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    keep_mask &= full;
    if (keep_mask == 0) throw contract_error("partial_trace: kept subsystem must be nonempty");
    const int k = popcount64(keep_mask);
    if (k > kDensityQubitCap) throw capability_error("partial_trace: kept subsystem too large");
    const std::uint64_t tr_mask = full & ~keep_mask;
    const int t = n - k;

    const std::uint64_t dk = std::uint64_t(1) << k;
    const std::uint64_t dt = std::uint64_t(1) << t;
    std::vector<std::uint64_t> keep_pos(dk), tr_pos(dt);
    for (std::uint64_t i = 0; i < dk; ++i) keep_pos[i] = deposit_bits(i, keep_mask);
    for (std::uint64_t i = 0; i < dt; ++i) tr_pos[i] = deposit_bits(i, tr_mask);

    DensityMatrix rho;
    rho.m = Eigen::MatrixXcd::Zero(static_cast<int>(dk), static_cast<int>(dk));
    for (std::uint64_t tt = 0; tt < dt; ++tt) {
        const std::uint64_t base = tr_pos[tt];
        for (std::uint64_t i = 0; i < dk; ++i) {
            const cdouble ai = s.amp[base | keep_pos[i]];
            if (ai == cdouble(0, 0)) continue;
            for (std::uint64_t j = 0; j < dk; ++j)
                rho.m(static_cast<int>(i), static_cast<int>(j)) +=
                    ai * std::conj(s.amp[base | keep_pos[j]]);
        }
    }
    return rho;
}

StateVector spin_flip(const StateVector& s) {
    const int n = s.n_qubits;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    const cdouble phase = i_pow(n);
    StateVector out(n);
    for (std::uint64_t y = 0; y < s.dim(); ++y) {
        const std::uint64_t yc = ~y & full;
        const double sign = (popcount64(yc) & 1) ? -1.0 : 1.0;
        out.amp[y] = phase * sign * std::conj(s.amp[yc]);
    }
    return out;
}

Eigen::MatrixXcd spin_flip_matrix(const Eigen::MatrixXcd& m) {
    const int d = static_cast<int>(m.rows());
    const int k = std::countr_zero(static_cast<unsigned>(d));
    if (m.cols() != d || (1 << k) != d)
        throw contract_error("spin_flip: dimension must be a power of two");
    const std::uint64_t full = std::uint64_t(d) - 1;
    const double global = (k & 1) ? -1.0 : 1.0;  // (i^k)^2
    Eigen::MatrixXcd out(d, d);
    for (int a = 0; a < d; ++a) {
        const std::uint64_t ac = ~std::uint64_t(a) & full;
        for (int b = 0; b < d; ++b) {
            const std::uint64_t bc = ~std::uint64_t(b) & full;
            const int sign_bits = (popcount64(ac) + popcount64(std::uint64_t(b))) & 1;
            const double sign = global * (sign_bits ? -1.0 : 1.0);
            out(a, b) = sign * std::conj(m(static_cast<int>(ac), static_cast<int>(bc)));
        }
    }
    return out;
}

DensityMatrix spin_flip(const DensityMatrix& rho) { return {spin_flip_matrix(rho.m)}; }

double n_tangle(const StateVector& s) {
    const int n = s.n_qubits;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    const cdouble phase = i_pow(n);
    cdouble overlap(0, 0);
    for (std::uint64_t y = 0; y < s.dim(); ++y) {
        const std::uint64_t yc = ~y & full;
        const double sign = (popcount64(yc) & 1) ? -1.0 : 1.0;
        overlap += sign * std::conj(s.amp[y]) * std::conj(s.amp[yc]);
    }
    return std::abs(phase * overlap);
}

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd lam = es.eigenvalues();
    // Eigenvalue dust of order ||h|| * 1e-16 turns into sqrt-scale noise if
    // it survives; a relative floor keeps rank-deficient marginals exact.
    const double floor = 1e-13 * std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
    for (int i = 0; i < lam.size(); ++i) {
        if (lam(i) < -1e-6) throw contract_error("hermitian_sqrt: input is not PSD");
        if (lam(i) < floor) lam(i) = 0;
    }
    return es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw contract_error("fidelity: dimension mismatch");
    // Tr[sqrt(sqrt(rho) sigma sqrt(rho))] equals the trace norm of
    // sqrt(sigma) * sqrt(rho); singular values lose far less precision on
    // nearly singular marginals than a second eigensolve would.
    const Eigen::MatrixXcd m = hermitian_sqrt(sigma.m) * hermitian_sqrt(rho.m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().sum();
}

double trace_ratio(const DensityMatrix& rho) {
    const DensityMatrix flipped = spin_flip(rho);
    // Tr[rho * flip] as an elementwise sum against the transpose.
    const cdouble num = (rho.m.array() * flipped.m.transpose().array()).sum();
    if (std::abs(num.imag()) >= 1e-10)
        throw contract_error("trace_ratio: numerator has nonvanishing imaginary part");
    const double den = rho.m.squaredNorm();  // Tr[rho^2] for Hermitian rho
    return num.real() / den;
}

}  // namespace entloc
