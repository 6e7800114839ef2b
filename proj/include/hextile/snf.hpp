#pragma once

#include <vector>

namespace hextile {

/// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    static IntMat identity(int n);
    bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& A, const IntMat& B);
std::vector<long long> mat_vec(const IntMat& A, const std::vector<long long>& x);

/// Diagonalization S = U * A * V by unimodular row/column operations with
/// the divisibility chain d1 | d2 | ... All arithmetic is exact; overflow
/// of the 64-bit intermediate values throws std::overflow_error.
struct SmithForm {
    int rows = 0, cols = 0, rank = 0;
    std::vector<long long> diag;  ///< positive invariant factors, length = rank
    IntMat U, Uinv, V, Vinv;
};

SmithForm smith_normal_form(IntMat A);

}  // namespace hextile
