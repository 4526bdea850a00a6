#include "entloc/gf2.hpp"

#include <bit>

#include "entloc/errors.hpp"

namespace entloc {

Gf2Vector gf2_matvec(const Gf2Matrix& m, const Gf2Vector& x) {
    if (x.len() != m.cols()) throw contract_error("gf2_matvec: dimension mismatch");
    Gf2Vector y(m.rows());
    const auto& xw = x.words_data();
    for (int r = 0; r < m.rows(); ++r) {
        const std::uint64_t* rw = m.row(r);
        std::uint64_t acc = 0;
        for (int w = 0; w < m.words_per_row(); ++w) acc ^= rw[w] & xw[w];
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

namespace {

// Gauss-Jordan elimination in place; optional d follows the row operations.
// Returns pivot columns in elimination order (one per pivot row).
std::vector<int> eliminate(Gf2Matrix& m, Gf2Vector* d) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.get(i, c)) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            m.swap_rows(p, r);
            if (d) {
                bool t = d->get(p);
                d->set(p, d->get(r));
                d->set(r, t);
            }
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) {
                m.xor_row(i, r);
                if (d) d->set(i, d->get(i) ^ d->get(r));
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int gf2_rank(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    return static_cast<int>(eliminate(work, nullptr).size());
}

std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& m, const Gf2Vector& d) {
    if (d.len() != m.rows()) throw contract_error("gf2_solve: d.len must equal m.rows");
    Gf2Matrix work = m;
    Gf2Vector rhs = d;
    const std::vector<int> pivots = eliminate(work, &rhs);
    for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i) {
        if (rhs.get(i)) return std::nullopt;
    }
    // Fully reduced rows carry exactly one pivot bit among pivot columns, so
    // with free variables at zero each pivot variable reads off the rhs.
    Gf2Vector x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x.set(pivots[k], rhs.get(static_cast<int>(k)));
    return x;
}

}  // namespace entloc
