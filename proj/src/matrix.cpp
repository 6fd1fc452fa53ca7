#include "strata/matrix.hpp"

#include "strata/errors.hpp"
#include "strata/prng.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strata {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                out.at(i, j) += a * o.at(k, j);
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::scaled(const Rat& c) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

Mat Mat::transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rat> Mat::col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

Mat Mat::hstack(const Mat& other) const {
    if (rows_ != other.rows_) throw ShapeError("hstack row mismatch");
    Mat out(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << strata::to_string(at(i, j));
        }
    }
    os << ']';
    return os.str();
}

int rank(const Mat& m) {
    // Scale each row to integers (row scaling preserves rank), then Bareiss.
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols; ++j) {
            Int den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < cols; ++j) {
            Rat scaled = m.at(i, j) * Rat(lcm);
            a[i][j] = scaled.get_num();
        }
    }

    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::pair<Mat, std::vector<int>> rref(const Mat& m) {
    Mat a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Rat inv = Rat(1) / a.at(r, c);
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

Mat kernel_basis(const Mat& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Mat out(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < out.cols(); ++k) {
        const int f = free_cols[k];
        out.at(f, k) = 1;
        for (size_t row = 0; row < pivots.size(); ++row)
            out.at(pivots[row], k) = -r.at(static_cast<int>(row), f);
    }
    return out;
}

Mat image_basis(const Mat& m) {
    auto pivots = rref(m).second;
    return m.cols_subset(pivots);
}

bool ColumnSpace::add(const std::vector<Rat>& v) {
    std::vector<Rat> w = v;
    if (static_cast<int>(w.size()) != dim_) throw ShapeError("ColumnSpace dimension mismatch");
    for (const auto& [lead, row] : rows_) {
        if (w[lead] == 0) continue;
        const Rat f = w[lead];
        for (int j = 0; j < dim_; ++j) w[j] -= f * row[j];
    }
    int lead = -1;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) { lead = j; break; }
    if (lead < 0) return false;
    const Rat inv = Rat(1) / w[lead];
    for (int j = 0; j < dim_; ++j) w[j] *= inv;
    rows_.emplace_back(lead, std::move(w));
    return true;
}

Mat complement_basis(const Mat& sub, int ambient_dim) {
    if (sub.rows() != ambient_dim && sub.cols() > 0)
        throw ShapeError("complement: subspace lives in wrong ambient dimension");
    ColumnSpace space(ambient_dim);
    for (int j = 0; j < sub.cols(); ++j)
        if (!space.add(sub.col(j)))
            throw PreconditionError("independent-columns", "complement_basis: input columns are dependent");
    std::vector<int> chosen;
    for (int i = 0; i < ambient_dim && space.rank() < ambient_dim; ++i) {
        std::vector<Rat> e(ambient_dim, Rat(0));
        e[i] = 1;
        if (space.add(e)) chosen.push_back(i);
    }
    Mat out(ambient_dim, static_cast<int>(chosen.size()));
    for (int k = 0; k < out.cols(); ++k) out.at(chosen[k], k) = 1;
    return out;
}

Mat solve_exact(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
    auto [r, pivots] = rref(a.hstack(b));
    // Consistency: no pivot may fall in the appended columns.
    for (int p : pivots)
        if (p >= a.cols()) throw ShapeError("solve: inconsistent system");
    if (static_cast<int>(pivots.size()) != a.cols())
        throw ShapeError("solve: solution not unique (rank-deficient matrix)");
    Mat x(a.cols(), b.cols());
    for (size_t row = 0; row < pivots.size(); ++row)
        for (int j = 0; j < b.cols(); ++j)
            x.at(pivots[row], j) = r.at(static_cast<int>(row), a.cols() + j);
    return x;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse: matrix not square");
    return solve_exact(a, Mat::identity(a.rows()));
}

bool in_column_space(const Mat& basis, const Mat& v) {
    if (basis.cols() == 0) return v.is_zero();
    return rank(basis) == rank(basis.hstack(v));
}

Mat random_matrix_of_rank(int rows, int cols, int r, uint64_t seed) {
    if (r < 0 || r > std::min(rows, cols))
        throw PreconditionError("rank-range", "random_matrix_of_rank: r out of range");
    Prng rng(seed);
    // Full-column-rank left factor: an r x r identity block placed on rows
    // chosen by a seeded permutation, random small entries elsewhere.
    Mat a(rows, r), b(r, cols);
    std::vector<int> rperm(rows), cperm(cols);
    for (int i = 0; i < rows; ++i) rperm[i] = i;
    for (int j = 0; j < cols; ++j) cperm[j] = j;
    for (int i = rows - 1; i > 0; --i) std::swap(rperm[i], rperm[rng.range(0, i)]);
    for (int j = cols - 1; j > 0; --j) std::swap(cperm[j], cperm[rng.range(0, j)]);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < r; ++j)
            a.at(i, j) = (rperm[i] < r) ? Rat(rperm[i] == j ? 1 : 0) : rat(rng.range(-2, 2));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j)
            b.at(i, j) = (cperm[j] < r) ? Rat(cperm[j] == i ? 1 : 0) : rat(rng.range(-2, 2));
    return a * b;
}

int LinearSystem::add_block(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative block shape");
    blocks_.push_back({rows, cols, total_});
    total_ += static_cast<long long>(rows) * cols;
    return static_cast<int>(blocks_.size()) - 1;
}

void LinearSystem::begin_equation() {
    eqs_.emplace_back();
}

void LinearSystem::add_term(const Rat& coeff, int block, int row, int col) {
    if (block < 0 || block >= static_cast<int>(blocks_.size())) throw ShapeError("unknown block id");
    const Block& b = blocks_[static_cast<size_t>(block)];
    if (row < 0 || row >= b.rows || col < 0 || col >= b.cols)
        throw ShapeError("term position outside block shape");
    if (eqs_.empty()) throw ShapeError("add_term before begin_equation");
    if (coeff == 0) return;
    eqs_.back().emplace_back(b.offset + static_cast<long long>(row) * b.cols + col, coeff);
}

namespace {

// Sparse echelon over Q: rows stored monic, indexed by leading unknown.
class SparseEchelon {
public:
    using Row = std::vector<std::pair<long long, Rat>>;

    void insert(Row row) {
        normalize(row);
        while (!row.empty()) {
            const long long lead = row.front().first;
            auto it = pivot_.find(lead);
            if (it == pivot_.end()) {
                const Rat inv = Rat(1) / row.front().second;
                if (inv != 1)
                    for (auto& [c, v] : row) v *= inv;
                pivot_.emplace(lead, std::move(row));
                ++rank_;
                return;
            }
            row = axpy(row, it->second, -row.front().second);
        }
    }

    long long rank() const { return rank_; }

private:
    static void normalize(Row& row) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row out;
        for (auto& [c, v] : row) {
            if (!out.empty() && out.back().first == c)
                out.back().second += v;
            else
                out.emplace_back(c, v);
        }
        row.clear();
        for (auto& t : out)
            if (t.second != 0) row.push_back(std::move(t));
    }

    // row + f * other, both sorted.
    static Row axpy(const Row& row, const Row& other, const Rat& f) {
        Row out;
        out.reserve(row.size() + other.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || other[j].first < row[i].first) {
                out.emplace_back(other[j].first, f * other[j].second);
                ++j;
            } else {
                Rat v = row[i].second + f * other[j].second;
                if (v != 0) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<long long, Row> pivot_;
    long long rank_ = 0;
};

} // namespace

long long LinearSystem::solution_dim() const {
    SparseEchelon ech;
    for (const auto& eq : eqs_) ech.insert(eq);
    return total_ - ech.rank();
}

Mat LinearSystem::solution_basis() const {
    Mat constraints(static_cast<int>(eqs_.size()), static_cast<int>(total_));
    for (size_t i = 0; i < eqs_.size(); ++i)
        for (const auto& [col, v] : eqs_[i])
            constraints.at(static_cast<int>(i), static_cast<int>(col)) += v;
    return kernel_basis(constraints);
}

Mat LinearSystem::block_of(const Mat& solutions, int column, int block) const {
    const Block& b = blocks_[static_cast<size_t>(block)];
    Mat out(b.rows, b.cols);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            out.at(i, j) = solutions.at(static_cast<int>(b.offset) + i * b.cols + j, column);
    return out;
}

} // namespace strata
