#ifndef STRATA_FP_HPP
#define STRATA_FP_HPP

#include <vector>

namespace strata {

// Small dense matrices over GF(p) for the census oracle.  p stays tiny
// (2, 3, 5, 7), entries are kept reduced in [0, p).

struct FpMat {
    int p = 2;
    int rows = 0, cols = 0;
    std::vector<int> e;

    FpMat() = default;
    FpMat(int p_, int rows_, int cols_)
        : p(p_), rows(rows_), cols(cols_), e(static_cast<size_t>(rows_) * cols_, 0) {}

    int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

int fp_inv(int a, int p);
FpMat fp_mul(const FpMat& a, const FpMat& b);
bool fp_is_zero(const FpMat& a);
int fp_rank(FpMat a);

/// True iff a is in reduced row echelon form with no zero row — the
/// canonical representative of its row space, used to enumerate each
/// subspace exactly once.
bool fp_is_rref_full(const FpMat& a);

/// Solve a x = b; returns false when inconsistent.  Requires a to have full
/// column rank when a solution exists (used to express vectors in a basis).
bool fp_solve(const FpMat& a, const FpMat& b, FpMat* x);

/// Columns span ker(a), one per free column of the RREF (pivot rule as over
/// the rationals).
FpMat fp_kernel_basis(const FpMat& a);

/// The columns of a at its RREF pivot indices.
FpMat fp_image_basis(const FpMat& a);

} // namespace strata

#endif
