#include "entloc/localization.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "entloc/errors.hpp"
#include "entloc/nelder_mead.hpp"

namespace entloc {

namespace {

constexpr double kPi = std::numbers::pi;

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

// Applies a 2x2 matrix to one qubit of a dense state, in place.
void apply_1q(StateVector& s, int qubit, const std::array<cdouble, 4>& m) {
    const std::uint64_t bit = std::uint64_t(1) << qubit;
    for (std::uint64_t x = 0; x < s.dim(); ++x) {
        if (x & bit) continue;
        const cdouble a0 = s.amp[x];
        const cdouble a1 = s.amp[x | bit];
        s.amp[x] = m[0] * a0 + m[1] * a1;
        s.amp[x | bit] = m[2] * a0 + m[3] * a1;
    }
}

// Unnormalized branch tangle |<m|m~>| and probability |m|^2, evaluated
// without dividing by the branch probability.
struct BranchStats {
    double prob;
    double f;  // prob * tangle(normalized branch)
};

BranchStats branch_stats(const cdouble* m, int nb) {
    const std::uint64_t dim = std::uint64_t(1) << nb;
    const std::uint64_t full = dim - 1;
    double p = 0;
    cdouble overlap(0, 0);
    for (std::uint64_t y = 0; y < dim; ++y) {
        p += std::norm(m[y]);
        const std::uint64_t yc = ~y & full;
        const double sign = (std::popcount(yc) & 1) ? -1.0 : 1.0;
        overlap += sign * std::conj(m[y]) * std::conj(m[yc]);
    }
    return {p, std::abs(overlap)};
}

void check_even_b(const Bipartition& bp, const char* who) {
    if (bp.n_b() % 2 != 0) throw contract_error(std::string(who) + ": |B| must be even");
}

}  // namespace

std::array<cdouble, 2> SingleQubitBasis::primary() const {
    return {cdouble(std::cos(theta / 2), 0), std::polar(std::sin(theta / 2), phi)};
}

std::array<cdouble, 2> SingleQubitBasis::orthogonal() const {
    return {cdouble(std::sin(theta / 2), 0), -std::polar(std::cos(theta / 2), phi)};
}

StateVector ProductBasis::element(std::uint64_t i) const {
    const int k = n_qubits();
    StateVector v(k);
    v.amp[0] = 1.0;
    for (int q = 0; q < k; ++q) {
        const auto col = ((i >> q) & 1) ? per_qubit[q].orthogonal() : per_qubit[q].primary();
        apply_1q(v, q, {col[0], cdouble(0, 0), col[1], cdouble(0, 0)});
    }
    return v;
}

StateVector GlobalBasis::element(std::uint64_t i) const {
    const int d = dim();
    const int k = std::countr_zero(static_cast<unsigned>(d));
    StateVector v(k);
    for (int r = 0; r < d; ++r) v.amp[r] = u(r, static_cast<int>(i));
    return v;
}

void OptimizerConfig::validate() const {
    if (restarts <= 0 || max_evals <= 0 || tol <= 0)
        throw contract_error("OptimizerConfig: restarts, max_evals and tol must be positive");
}

StateVector haar_state(int n_qubits, Rng& rng, int qubit_cap) {
    if (n_qubits < 1 || n_qubits > qubit_cap) throw capability_error("haar_state: bad qubit count");
    StateVector s(n_qubits);
    for (cdouble& a : s.amp) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = cdouble(re, im);
    }
    s.normalize();
    return s;
}

GlobalBasis haar_basis(int dim, Rng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cdouble(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        const cdouble d = r(j, j);
        const cdouble phase = (std::abs(d) > 0) ? d / std::abs(d) : cdouble(1, 0);
        q.col(j) *= phase;
    }
    return GlobalBasis{std::move(q)};
}

PostMeasurement post_measurement(const StateVector& psi, const Bipartition& bp,
                                 const StateVector& v) {
    if (psi.n_qubits != bp.n) throw contract_error("post_measurement: state/bipartition mismatch");
    if (v.n_qubits != bp.n_a()) throw contract_error("post_measurement: v must live on A");
    const std::uint64_t a_mask = bp.a_mask & bp.full_mask();
    const std::uint64_t b_mask = bp.b_mask();
    const int nb = bp.n_b();

    const std::uint64_t da = std::uint64_t(1) << bp.n_a();
    const std::uint64_t db = std::uint64_t(1) << nb;
    std::vector<std::uint64_t> a_pos(da), b_pos(db);
    for (std::uint64_t i = 0; i < da; ++i) a_pos[i] = deposit_bits(i, a_mask);
    for (std::uint64_t i = 0; i < db; ++i) b_pos[i] = deposit_bits(i, b_mask);

    StateVector branch(nb);
    double p = 0;
    for (std::uint64_t b = 0; b < db; ++b) {
        cdouble acc(0, 0);
        for (std::uint64_t a = 0; a < da; ++a) acc += std::conj(v.amp[a]) * psi.amp[a_pos[a] | b_pos[b]];
        branch.amp[b] = acc;
        p += std::norm(acc);
    }
    if (p < kBranchProbFloor) return {p, std::nullopt};
    const double inv = 1.0 / std::sqrt(p);
    for (cdouble& a : branch.amp) a *= inv;
    return {p, std::move(branch)};
}

double branch_tangle(const StateVector& psi, const Bipartition& bp, const StateVector& v) {
    check_even_b(bp, "branch_tangle");
    PostMeasurement pm = post_measurement(psi, bp, v);
    if (!pm.state) return 0.0;
    return pm.prob * n_tangle(*pm.state);
}

double avg_tangle(const StateVector& psi, const Bipartition& bp, const ProductBasis& basis) {
    check_even_b(bp, "avg_tangle");
    if (basis.n_qubits() != bp.n_a()) throw contract_error("avg_tangle: basis/bipartition mismatch");
    const std::uint64_t a_mask = bp.a_mask & bp.full_mask();
    const std::uint64_t b_mask = bp.b_mask();
    const int nb = bp.n_b();

    // Rotate each measured qubit into its basis frame: psi' = (U^dag x I) psi,
    // after which the A-index directly labels the basis element.
    StateVector rotated = psi;
    std::vector<int> a_qubits = mask_to_indices(a_mask, bp.n);
    for (std::size_t k = 0; k < a_qubits.size(); ++k) {
        const auto v = basis.per_qubit[k].primary();
        const auto w = basis.per_qubit[k].orthogonal();
        apply_1q(rotated, a_qubits[k],
                 {std::conj(v[0]), std::conj(v[1]), std::conj(w[0]), std::conj(w[1])});
    }

    const std::uint64_t da = std::uint64_t(1) << a_qubits.size();
    const std::uint64_t db = std::uint64_t(1) << nb;
    std::vector<std::uint64_t> a_pos(da), b_pos(db);
    for (std::uint64_t i = 0; i < da; ++i) a_pos[i] = deposit_bits(i, a_mask);
    for (std::uint64_t i = 0; i < db; ++i) b_pos[i] = deposit_bits(i, b_mask);

    std::vector<cdouble> branch(db);
    double total = 0;
    for (std::uint64_t i = 0; i < da; ++i) {
        for (std::uint64_t b = 0; b < db; ++b) branch[b] = rotated.amp[a_pos[i] | b_pos[b]];
        const BranchStats st = branch_stats(branch.data(), nb);
        if (st.prob >= kBranchProbFloor) total += st.f;
    }
    return total;
}

double avg_tangle(const StateVector& psi, const Bipartition& bp, const GlobalBasis& basis) {
    check_even_b(bp, "avg_tangle");
    const std::uint64_t a_mask = bp.a_mask & bp.full_mask();
    const std::uint64_t b_mask = bp.b_mask();
    const int nb = bp.n_b();
    const std::uint64_t da = std::uint64_t(1) << bp.n_a();
    const std::uint64_t db = std::uint64_t(1) << nb;
    if (basis.dim() != static_cast<int>(da)) throw contract_error("avg_tangle: basis dimension mismatch");

    std::vector<std::uint64_t> a_pos(da), b_pos(db);
    for (std::uint64_t i = 0; i < da; ++i) a_pos[i] = deposit_bits(i, a_mask);
    for (std::uint64_t i = 0; i < db; ++i) b_pos[i] = deposit_bits(i, b_mask);

    std::vector<cdouble> branch(db);
    double total = 0;
    for (std::uint64_t i = 0; i < da; ++i) {
        for (std::uint64_t b = 0; b < db; ++b) {
            cdouble acc(0, 0);
            for (std::uint64_t a = 0; a < da; ++a)
                acc += std::conj(basis.u(static_cast<int>(a), static_cast<int>(i))) *
                       psi.amp[a_pos[a] | b_pos[b]];
            branch[b] = acc;
        }
        const BranchStats st = branch_stats(branch.data(), nb);
        if (st.prob >= kBranchProbFloor) total += st.f;
    }
    return total;
}

double ea_from_marginal(const DensityMatrix& rho) {
    // F(rho, rho~) with one eigensolve: the flip commutes with the square
    // root, so sqrt(rho~) = flip(sqrt(rho)), and the fidelity is the trace
    // norm of flip(sqrt(rho)) * sqrt(rho).
    const Eigen::MatrixXcd sq = hermitian_sqrt(rho.m);
    const Eigen::MatrixXcd m = spin_flip_matrix(sq) * sq;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m);
    const Eigen::VectorXd lam = es.eigenvalues();
    const double floor = 1e-13 * std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
    double f = 0;
    for (int i = 0; i < lam.size(); ++i)
        if (lam(i) > floor) f += std::sqrt(lam(i));
    return f;
}

double ea(const StateVector& psi, const Bipartition& bp) {
    check_even_b(bp, "ea");
    return ea_from_marginal(partial_trace(psi, bp.b_mask()));
}

double le(const StateVector& psi, const Bipartition& bp, const OptimizerConfig& cfg) {
    check_even_b(bp, "le");
    cfg.validate();
    const int na = bp.n_a();
    if (na < 1) throw contract_error("le: A must be nonempty");

    auto objective = [&](const std::vector<double>& angles) {
        ProductBasis basis;
        basis.per_qubit.resize(na);
        for (int k = 0; k < na; ++k) {
            basis.per_qubit[k].theta = angles[2 * k];
            basis.per_qubit[k].phi = angles[2 * k + 1];
        }
        return avg_tangle(psi, bp, basis);
    };

    double best = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        std::vector<double> x0(2 * na);
        for (int k = 0; k < na; ++k) {
            x0[2 * k] = rng.uniform() * kPi;
            x0[2 * k + 1] = rng.uniform() * 2 * kPi;
        }
        const NelderMeadResult res =
            nelder_mead_maximize(objective, std::move(x0), 0.3, cfg.max_evals, cfg.tol);
        if (std::isnan(res.value)) {
            std::fprintf(stderr, "le: restart %d produced NaN, skipped\n", r);
            continue;
        }
        best = std::max(best, res.value);
    }
    return best;
}

namespace {

// Trace distance between rank-one projectors from the overlap magnitude.
double pair_distance(double overlap_mag2) {
    const double inside = 1.0 - overlap_mag2;
    return 2.0 * std::sqrt(inside > 0 ? inside : 0.0);
}

}  // namespace

double basis_norm(const ProductBasis& beta, const ProductBasis& gamma) {
    if (beta.n_qubits() != gamma.n_qubits()) throw contract_error("basis_norm: dimension mismatch");
    const int k = beta.n_qubits();
    std::vector<cdouble> o0(k), o1(k);
    for (int q = 0; q < k; ++q) {
        const auto v = beta.per_qubit[q].primary();
        const auto vp = beta.per_qubit[q].orthogonal();
        const auto w = gamma.per_qubit[q].primary();
        const auto wp = gamma.per_qubit[q].orthogonal();
        o0[q] = std::conj(v[0]) * w[0] + std::conj(v[1]) * w[1];
        o1[q] = std::conj(vp[0]) * wp[0] + std::conj(vp[1]) * wp[1];
    }
    double worst = 0;
    for (std::uint64_t i = 0; i < beta.dim(); ++i) {
        double mag2 = 1.0;
        for (int q = 0; q < k; ++q) mag2 *= std::norm(((i >> q) & 1) ? o1[q] : o0[q]);
        worst = std::max(worst, pair_distance(mag2));
    }
    return worst;
}

double basis_norm(const GlobalBasis& beta, const GlobalBasis& gamma) {
    if (beta.dim() != gamma.dim()) throw contract_error("basis_norm: dimension mismatch");
    double worst = 0;
    for (int i = 0; i < beta.dim(); ++i) {
        const cdouble ov = (beta.u.col(i).adjoint() * gamma.u.col(i))(0, 0);
        worst = std::max(worst, pair_distance(std::norm(ov)));
    }
    return worst;
}

double k_constant(std::uint64_t d_b) {
    if (d_b < 2 || (d_b & (d_b - 1)) != 0)
        throw contract_error("k_constant: d_B must be a power of two >= 2");
    return std::sqrt(2.0 / (static_cast<double>(d_b) + 1.0));
}

double concentration_rhs(TailBound bound, double d_a, double d_b, double n_a, double eps,
                         double c) {
    if (eps <= 0) throw contract_error("concentration_rhs: eps must be positive");
    const double ln2 = std::log(2.0);
    const double pi3 = kPi * kPi * kPi;
    const double lipschitz2 = (4.0 * std::sqrt(2.0) + 2.0) * (4.0 * std::sqrt(2.0) + 2.0);
    double log_value = 0;
    switch (bound) {
        case TailBound::EaUpperTail:
            log_value = ln2 + 2.0 * d_a * std::log(10.0 * std::sqrt(2.0) * d_a * d_b / eps) -
                        d_b * eps * eps / (18.0 * pi3 * lipschitz2 * d_a);
            break;
        case TailBound::LeUpperTail: {
            const double net = 40.0 * (1.0 + 2.0 * std::sqrt(2.0)) * (1.0 + 2.0 * std::sqrt(2.0)) *
                               n_a * n_a * d_a * d_a * d_b * d_b / (eps * eps);
            log_value = ln2 + 8.0 * n_a * std::log(net) - d_a * d_b * eps * eps / (18.0 * pi3 * lipschitz2);
            break;
        }
        case TailBound::EaExpTail:
            log_value = ln2 - c * d_a * d_b * eps * eps;
            break;
    }
    return std::exp(log_value);
}

}  // namespace entloc
