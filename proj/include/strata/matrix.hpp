#ifndef STRATA_MATRIX_HPP
#define STRATA_MATRIX_HPP

#include "strata/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace strata {

/// Dense matrix over the rationals, row-major.  Values are immutable in
/// spirit: operations return fresh matrices.  Everything downstream (rank
/// profiles, witnesses, oracles) reduces to these routines, so pivoting is
/// deterministic throughout: first nonzero entry in row-major scan order.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transposed() const;

    /// Column j as a dense vector.
    std::vector<Rat> col(int j) const;
    /// Matrix whose columns are the given subset (in the given order).
    Mat cols_subset(const std::vector<int>& idx) const;
    /// [this | other] side by side.
    Mat hstack(const Mat& other) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

/// Exact rank, computed by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix, first-nonzero pivoting.
int rank(const Mat& m);

/// Reduced row echelon form.  Returns the RREF and the pivot columns in
/// increasing order.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

/// Columns span ker(m); one column per free column of the RREF, in
/// increasing free-column order, with unit entry at the free coordinate.
Mat kernel_basis(const Mat& m);

/// Columns span im(m): the original columns at the RREF pivot indices.
Mat image_basis(const Mat& m);

/// Deterministic complement: extend the (independent) columns of sub to a
/// basis of the ambient space by greedily appending standard basis vectors
/// in index order; returns only the appended vectors.  Throws
/// PreconditionError if the input columns are dependent.
Mat complement_basis(const Mat& sub, int ambient_dim);

/// Solve A X = B exactly.  Requires the system to be consistent and A to
/// have full column rank (unique solution); throws otherwise.
Mat solve_exact(const Mat& a, const Mat& b);

/// Inverse of a square invertible matrix; throws on singular input.
Mat inverse(const Mat& a);

/// True iff v lies in the column space of basis.
bool in_column_space(const Mat& basis, const Mat& v);

/// Reproducible matrix of exact rank r: a product of full-rank factors with
/// small integer entries, derived from the seed.  Requires r <= min(rows, cols).
Mat random_matrix_of_rank(int rows, int cols, int r, uint64_t seed);

/// Incremental column-space tracker (exact).  add() returns true and keeps
/// the column when it enlarges the span.
class ColumnSpace {
public:
    explicit ColumnSpace(int dim) : dim_(dim) {}
    bool add(const std::vector<Rat>& v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    // reduced rows: (leading column, dense row normalized to leading 1)
    std::vector<std::pair<int, std::vector<Rat>>> rows_;
};

/// Homogeneous linear system over named matrix blocks of unknowns.
/// Equations are sparse lists of (coefficient, block, row, col) terms.
/// solution_dim() uses a sparse echelon and scales to systems with a few
/// thousand unknowns; solution_basis() assembles the dense kernel and is
/// meant for small systems.
class LinearSystem {
public:
    int add_block(int rows, int cols);
    void begin_equation();
    void add_term(const Rat& coeff, int block, int row, int col);

    long long total_unknowns() const { return total_; }
    long long equation_count() const { return eqs_.size(); }

    long long solution_dim() const;
    /// Columns form a basis of the solution space; unknowns are ordered
    /// block by block, row-major inside each block.
    Mat solution_basis() const;

    /// Slice one block out of a solution-space column.
    Mat block_of(const Mat& solutions, int column, int block) const;

private:
    struct Block {
        int rows, cols;
        long long offset;
    };
    std::vector<Block> blocks_;
    long long total_ = 0;
    using SparseRow = std::vector<std::pair<long long, Rat>>;
    std::vector<SparseRow> eqs_;
};

} // namespace strata

#endif
