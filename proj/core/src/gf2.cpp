#include "flows/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace flows {

void Gf2Matrix::swap_rows(int a, int b) {
    assert(a >= 0 && a < rows_ && b >= 0 && b < rows_);
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void Gf2Matrix::xor_row(int dst, int src) {
    assert(dst >= 0 && dst < rows_ && src >= 0 && src < rows_);
    auto rd = row(dst);
    auto rs = row(src);
    for (std::size_t i = 0; i < rd.size(); ++i) rd[i] ^= rs[i];
}

namespace {

/// Reduces u in place; v, when present, receives the same row operations.
/// Returns the pivot columns in ascending order.
std::vector<int> eliminate(Gf2Matrix& u, Gf2Matrix* v) {
    std::vector<int> pivots;
    const int rows = u.rows();
    const int cols = u.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int q = r; q < rows; ++q) {
            if (u.get(q, c)) {
                p = q;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            u.swap_rows(p, r);
            if (v) v->swap_rows(p, r);
        }
        for (int q = r + 1; q < rows; ++q) {
            if (u.get(q, c)) {
                u.xor_row(q, r);
                if (v) v->xor_row(q, r);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool dot_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    assert(a.size() == b.size());
    int parity = 0;
    for (std::size_t i = 0; i < a.size(); ++i) parity ^= std::popcount(a[i] & b[i]);
    return parity & 1;
}

}  // namespace

Echelon row_echelon(Gf2Matrix m) {
    auto pivots = eliminate(m, nullptr);
    return {std::move(m), std::move(pivots)};
}

std::vector<std::optional<Bitset>> solve_many(const Gf2Matrix& a, const Gf2Matrix& rhs) {
    if (a.rows() != rhs.rows())
        throw std::invalid_argument("solve_many: matrix and right-hand sides disagree on row count");

    Gf2Matrix u = a;
    Gf2Matrix v = rhs;
    const std::vector<int> pivots = eliminate(u, &v);
    const int rank = static_cast<int>(pivots.size());

    std::vector<std::optional<Bitset>> solutions;
    solutions.reserve(static_cast<std::size_t>(v.cols()));
    for (int j = 0; j < v.cols(); ++j) {
        bool consistent = true;
        for (int q = rank; q < u.rows(); ++q) {
            if (v.get(q, j)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            solutions.emplace_back(std::nullopt);
            continue;
        }
        Bitset x(a.cols());
        for (int i = rank - 1; i >= 0; --i) {
            const bool bit = v.get(i, j) ^ dot_parity(u.row(i), {x.words().data(), x.words().size()});
            if (bit) x.set(pivots[i]);
        }
        solutions.emplace_back(std::move(x));
    }
    return solutions;
}

Bitset mat_vec_mul(const Gf2Matrix& a, const Bitset& x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("mat_vec_mul: vector length does not match column count");
    Bitset y(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        if (dot_parity(a.row(r), {x.words().data(), x.words().size()})) y.set(r);
    }
    return y;
}

}  // namespace flows
