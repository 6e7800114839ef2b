#include "hextile/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hextile {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("snf: multiply overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("snf: subtract overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("snf: add overflow");
    return r;
}

}  // namespace

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            long long aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(k, j) != 0)
                    C.at(i, j) = checked_add(C.at(i, j), checked_mul(aik, B.at(k, j)));
        }
    return C;
}

std::vector<long long> mat_vec(const IntMat& A, const std::vector<long long>& x) {
    std::vector<long long> y(A.rows, 0);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (A.at(i, j) != 0 && x[j] != 0)
                y[i] = checked_add(y[i], checked_mul(A.at(i, j), x[j]));
    return y;
}

namespace {

struct Worker {
    IntMat A, U, Uinv, V, Vinv;

    explicit Worker(IntMat m)
        : A(std::move(m)),
          U(IntMat::identity(A.rows)),
          Uinv(IntMat::identity(A.rows)),
          V(IntMat::identity(A.cols)),
          Vinv(IntMat::identity(A.cols)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    void negate_row(int i) {
        for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
    // row[j] += q * row[i]
    void add_row(int i, int j, long long q) {
        if (q == 0) return;
        for (int c = 0; c < A.cols; ++c)
            A.at(j, c) = checked_add(A.at(j, c), checked_mul(q, A.at(i, c)));
        for (int c = 0; c < U.cols; ++c)
            U.at(j, c) = checked_add(U.at(j, c), checked_mul(q, U.at(i, c)));
        for (int r = 0; r < Uinv.rows; ++r)
            Uinv.at(r, i) = checked_sub(Uinv.at(r, i), checked_mul(q, Uinv.at(r, j)));
    }
    // col[j] += q * col[i]
    void add_col(int i, int j, long long q) {
        if (q == 0) return;
        for (int r = 0; r < A.rows; ++r)
            A.at(r, j) = checked_add(A.at(r, j), checked_mul(q, A.at(r, i)));
        for (int r = 0; r < V.rows; ++r)
            V.at(r, j) = checked_add(V.at(r, j), checked_mul(q, V.at(r, i)));
        for (int c = 0; c < Vinv.cols; ++c)
            Vinv.at(i, c) = checked_sub(Vinv.at(i, c), checked_mul(q, Vinv.at(j, c)));
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        long long best = 0;
        pi = pj = -1;
        for (int i = t; i < A.rows; ++i)
            for (int j = t; j < A.cols; ++j) {
                long long v = std::llabs(A.at(i, j));
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return pi >= 0;
    }

    void reduce() {
        int t = 0;
        int bound = std::min(A.rows, A.cols);
        while (t < bound) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            if (A.at(t, t) < 0) negate_row(t);
            bool clean = true;
            for (int i = t + 1; i < A.rows; ++i) {
                long long q = A.at(i, t) / A.at(t, t);
                add_row(t, i, -q);
                if (A.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < A.cols; ++j) {
                long long q = A.at(t, j) / A.at(t, t);
                add_col(t, j, -q);
                if (A.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders became new, smaller pivot candidates
            // enforce divisibility d_t | everything below-right
            bool redo = false;
            for (int i = t + 1; i < A.rows && !redo; ++i)
                for (int j = t + 1; j < A.cols && !redo; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        add_row(i, t, 1);
                        redo = true;
                    }
            if (redo) continue;
            ++t;
        }
    }
};

}  // namespace

SmithForm smith_normal_form(IntMat A) {
    Worker w(std::move(A));
    w.reduce();
    SmithForm out;
    out.rows = w.A.rows;
    out.cols = w.A.cols;
    int bound = std::min(out.rows, out.cols);
    for (int t = 0; t < bound; ++t) {
        long long d = w.A.at(t, t);
        if (d == 0) break;
        out.diag.push_back(d);
    }
    out.rank = static_cast<int>(out.diag.size());
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    return out;
}

}  // namespace hextile
