#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace entloc {

// Bit-packed vector over GF(2). Bits beyond `len` in the last word are zero.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int len) : len_(len), data_(words(len), 0) {}

    int len() const { return len_; }
    bool get(int i) const { return (data_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            data_[i >> 6] |= m;
        else
            data_[i >> 6] &= ~m;
    }

    const std::vector<std::uint64_t>& words_data() const { return data_; }

    bool operator==(const Gf2Vector& o) const { return len_ == o.len_ && data_ == o.data_; }

    static int words(int len) { return (len + 63) >> 6; }

private:
    int len_ = 0;
    std::vector<std::uint64_t> data_;
};

// Dense bit-packed matrix over GF(2), row-major, one word holds 64 columns.
// Trailing bits of each row's final word are kept zero so whole-word XOR is
// safe. Empty shapes (0 rows or 0 cols) are valid.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_(Gf2Vector::words(cols)), data_(std::size_t(rows) * wpr_, 0) {}

    static Gf2Matrix identity(int n) {
        Gf2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        return (data_[std::size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (c & 63);
        std::uint64_t& w = data_[std::size_t(r) * wpr_ + (c >> 6)];
        if (v)
            w |= m;
        else
            w &= ~m;
    }

    std::uint64_t* row(int r) { return data_.data() + std::size_t(r) * wpr_; }
    const std::uint64_t* row(int r) const { return data_.data() + std::size_t(r) * wpr_; }

    void xor_row(int dst, int src) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(int a, int b) {
        std::uint64_t* ra = row(a);
        std::uint64_t* rb = row(b);
        for (int w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
    }

    bool operator==(const Gf2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// y = m * x over GF(2).
Gf2Vector gf2_matvec(const Gf2Matrix& m, const Gf2Vector& x);

// GF(2) rank; works on a copy, the input is never modified.
int gf2_rank(const Gf2Matrix& m);

// Solves m * x = d over GF(2). Returns the witness with free variables set
// to zero under deterministic pivoting (leftmost column, topmost row), or
// nullopt when the system is inconsistent. A 0-row system is trivially
// solvable by the zero vector. Throws contract_error when d.len != m.rows.
std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& m, const Gf2Vector& d);

}  // namespace entloc
