#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flows/bitset.hpp"

namespace flows {

/// Dense matrix over GF(2). Rows are packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), stride_((static_cast<std::size_t>(cols) + 63) / 64),
          bits_(static_cast<std::size_t>(rows) * stride_, 0) {}

    static Gf2Matrix identity(int n) {
        Gf2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (row(r)[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1U;
    }
    void set(int r, int c, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        auto& word = row(r)[static_cast<std::size_t>(c) >> 6];
        if (v)
            word |= bit;
        else
            word &= ~bit;
    }

    void swap_rows(int a, int b);
    /// row[dst] ^= row[src]
    void xor_row(int dst, int src);

    std::span<const std::uint64_t> row(int r) const {
        return {bits_.data() + static_cast<std::size_t>(r) * stride_, stride_};
    }
    std::span<std::uint64_t> row(int r) {
        return {bits_.data() + static_cast<std::size_t>(r) * stride_, stride_};
    }

    bool operator==(const Gf2Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Echelon {
    Gf2Matrix matrix;
    std::vector<int> pivot_cols;
};

/// Row-echelon form via row swaps and XOR row operations.
Echelon row_echelon(Gf2Matrix m);

/// Solves a * x = b for every column b of rhs, sharing one elimination pass
/// across all right-hand sides. Free variables are fixed to zero, so each
/// consistent system yields one definite solution; inconsistent columns
/// yield nullopt. Throws std::invalid_argument when the row counts differ.
std::vector<std::optional<Bitset>> solve_many(const Gf2Matrix& a, const Gf2Matrix& rhs);

/// y = a * x over GF(2). Throws std::invalid_argument on a shape mismatch.
Bitset mat_vec_mul(const Gf2Matrix& a, const Bitset& x);

}  // namespace flows
