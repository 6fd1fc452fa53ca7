#include "strata/fp.hpp"

#include "strata/errors.hpp"

namespace strata {

int fp_inv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw ShapeError("fp_inv of zero");
    // p is tiny; scan.
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw ShapeError("fp_inv: modulus not prime");
}

FpMat fp_mul(const FpMat& a, const FpMat& b) {
    if (a.cols != b.rows || a.p != b.p) throw ShapeError("fp_mul shape mismatch");
    FpMat out(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const int v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = (out.at(i, j) + v * b.at(k, j)) % a.p;
        }
    return out;
}

bool fp_is_zero(const FpMat& a) {
    for (int v : a.e)
        if (v) return false;
    return true;
}

int fp_rank(FpMat a) {
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const int inv = fp_inv(a.at(r, c), a.p);
        for (int j = c; j < a.cols; ++j) a.at(r, j) = a.at(r, j) * inv % a.p;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r) continue;
            const int f = a.at(i, c);
            if (!f) continue;
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) = ((a.at(i, j) - f * a.at(r, j)) % a.p + a.p) % a.p;
        }
        ++r;
    }
    return r;
}

bool fp_is_rref_full(const FpMat& a) {
    int prev_pivot = -1;
    for (int i = 0; i < a.rows; ++i) {
        int lead = -1;
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j)) { lead = j; break; }
        if (lead < 0) return false;              // zero row
        if (lead <= prev_pivot) return false;    // pivots must step right
        if (a.at(i, lead) != 1) return false;    // monic pivot
        for (int i2 = 0; i2 < a.rows; ++i2)
            if (i2 != i && a.at(i2, lead)) return false; // cleared column
        prev_pivot = lead;
    }
    return true;
}

namespace {

// RREF in place; returns pivot columns.
std::vector<int> fp_rref(FpMat& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const int inv = fp_inv(a.at(r, c), a.p);
        for (int j = c; j < a.cols; ++j) a.at(r, j) = a.at(r, j) * inv % a.p;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r) continue;
            const int f = a.at(i, c);
            if (!f) continue;
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) = ((a.at(i, j) - f * a.at(r, j)) % a.p + a.p) % a.p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

FpMat fp_kernel_basis(const FpMat& a) {
    FpMat r = a;
    const auto pivots = fp_rref(r);
    std::vector<bool> is_pivot(a.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    FpMat out(a.p, a.cols, static_cast<int>(free_cols.size()));
    for (int k = 0; k < out.cols; ++k) {
        const int f = free_cols[k];
        out.at(f, k) = 1;
        for (size_t row = 0; row < pivots.size(); ++row)
            out.at(pivots[row], k) = (a.p - r.at(static_cast<int>(row), f)) % a.p;
    }
    return out;
}

FpMat fp_image_basis(const FpMat& a) {
    FpMat r = a;
    const auto pivots = fp_rref(r);
    FpMat out(a.p, a.rows, static_cast<int>(pivots.size()));
    for (int k = 0; k < out.cols; ++k)
        for (int i = 0; i < a.rows; ++i) out.at(i, k) = a.at(i, pivots[k]);
    return out;
}

bool fp_solve(const FpMat& a, const FpMat& b, FpMat* x) {
    if (a.rows != b.rows || a.p != b.p) throw ShapeError("fp_solve shape mismatch");
    FpMat m(a.p, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const int inv = fp_inv(m.at(r, c), m.p);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % m.p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const int f = m.at(i, c);
            if (!f) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = ((m.at(i, j) - f * m.at(r, j)) % m.p + m.p) % m.p;
        }
        if (c >= a.cols) return false; // pivot in the right-hand side: inconsistent
        pivots.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivots.size()) != a.cols)
        throw ShapeError("fp_solve: matrix lacks full column rank");
    if (x) {
        *x = FpMat(a.p, a.cols, b.cols);
        for (size_t row = 0; row < pivots.size(); ++row)
            for (int j = 0; j < b.cols; ++j)
                x->at(pivots[row], j) = m.at(static_cast<int>(row), a.cols + j);
    }
    return true;
}

} // namespace strata
