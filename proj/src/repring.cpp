#include "strata/repring.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

const TypeTable& TypeTable::sl2() {
    static const TypeTable table;
    return table;
}

TypeTable::TypeTable(std::map<long long, long long> dims, long long trivial_id)
    : sl2_(false), trivial_(trivial_id), dims_(std::move(dims)) {
    auto it = dims_.find(trivial_);
    if (it == dims_.end() || it->second != 1)
        throw ShapeError("type table must contain the trivial type with dimension 1");
    for (const auto& [id, d] : dims_)
        if (d <= 0) throw ShapeError("irreducible dimensions must be positive");
}

long long TypeTable::dim_of(long long id) const {
    if (sl2_) {
        if (id < 0) throw ShapeError("sl2 highest weight must be non-negative");
        return id + 1;
    }
    auto it = dims_.find(id);
    if (it == dims_.end()) throw ShapeError("unknown irreducible type " + std::to_string(id));
    return it->second;
}

RepClass::RepClass(std::map<long long, long long> mult) : mult_(std::move(mult)) {
    for (auto it = mult_.begin(); it != mult_.end();)
        it = it->second == 0 ? mult_.erase(it) : std::next(it);
}

RepClass RepClass::irreducible(long long id, long long mult) {
    RepClass out;
    if (mult != 0) out.mult_[id] = mult;
    return out;
}

long long RepClass::mult_of(long long id) const {
    auto it = mult_.find(id);
    return it == mult_.end() ? 0 : it->second;
}

bool RepClass::effective() const {
    return std::all_of(mult_.begin(), mult_.end(), [](const auto& p) { return p.second > 0; });
}

RepClass RepClass::operator+(const RepClass& o) const {
    std::map<long long, long long> out = mult_;
    for (const auto& [id, m] : o.mult_) out[id] += m;
    return RepClass(std::move(out));
}

RepClass RepClass::operator-(const RepClass& o) const {
    std::map<long long, long long> out = mult_;
    for (const auto& [id, m] : o.mult_) out[id] -= m;
    return RepClass(std::move(out));
}

std::string RepClass::to_string() const {
    if (mult_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, m] : mult_) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << "S" << id;
    }
    return os.str();
}

bool class_leq(const RepClass& a, const RepClass& b) {
    return (b - a).effective() || a == b;
}

RepClass class_min(const RepClass& a, const RepClass& b) {
    std::map<long long, long long> out;
    for (const auto& [id, m] : a.mult()) out[id] = std::min(m, b.mult_of(id));
    return RepClass(std::move(out));
}

long long class_dim(const RepClass& a, const TypeTable& table) {
    if (!a.effective()) throw PreconditionError("effective", "class_dim needs an effective class");
    long long total = 0;
    for (const auto& [id, m] : a.mult()) total += m * table.dim_of(id);
    return total;
}

namespace {

void require_effective(const RepClass& a, const char* where) {
    if (!a.effective())
        throw PreconditionError("effective", std::string(where) + " needs an effective class");
}

// flatten an effective class into its irreducible summands
std::vector<long long> summands(const RepClass& a) {
    std::vector<long long> out;
    for (const auto& [id, m] : a.mult())
        for (long long i = 0; i < m; ++i) out.push_back(id);
    return out;
}

RepClass tensor_irreps(long long a, long long b) {
    std::map<long long, long long> out;
    for (long long k = std::llabs(a - b); k <= a + b; k += 2) out[k] = 1;
    return RepClass(std::move(out));
}

RepClass sym_square_irrep(long long r) {
    std::map<long long, long long> out;
    for (long long m = 0; m <= r / 2; ++m) out[2 * r - 4 * m] += 1;
    return RepClass(std::move(out));
}

} // namespace

RepClass tensor_sl2(const RepClass& a, const RepClass& b) {
    require_effective(a, "tensor_sl2");
    require_effective(b, "tensor_sl2");
    RepClass out;
    for (const auto& [ia, ma] : a.mult())
        for (const auto& [ib, mb] : b.mult()) {
            RepClass term = tensor_irreps(ia, ib);
            for (long long i = 0; i < ma * mb; ++i) out = out + term;
        }
    return out;
}

RepClass sym_square_sl2(const RepClass& a) {
    require_effective(a, "sym_square_sl2");
    const std::vector<long long> parts = summands(a);
    RepClass out;
    for (size_t i = 0; i < parts.size(); ++i) {
        out = out + sym_square_irrep(parts[i]);
        for (size_t j = i + 1; j < parts.size(); ++j) out = out + tensor_irreps(parts[i], parts[j]);
    }
    return out;
}

std::vector<long long> class_weights(const RepClass& a) {
    require_effective(a, "class_weights");
    std::vector<long long> out;
    for (const auto& [k, m] : a.mult())
        for (long long copy = 0; copy < m; ++copy)
            for (long long j = 0; j <= k; ++j) out.push_back(k - 2 * j);
    std::sort(out.begin(), out.end());
    return out;
}

RepClass decompose_by_weights(std::vector<long long> weights) {
    std::map<long long, long long> count;
    for (long long w : weights) count[w] += 1;
    for (const auto& [w, m] : count)
        if (count.count(-w) == 0 || count[-w] != m)
            throw ParseError("weight multiset is not symmetric under negation");
    std::map<long long, long long> mult;
    while (true) {
        long long top = 0;
        bool found = false;
        for (auto it = count.rbegin(); it != count.rend(); ++it)
            if (it->second > 0) {
                top = it->first;
                found = true;
                break;
            }
        if (!found) break;
        if (top < 0) throw ParseError("weight multiset is not a character");
        for (long long j = top; j >= -top; j -= 2) {
            if (count[j] <= 0) throw ParseError("weight multiset is not a character");
            count[j] -= 1;
        }
        mult[top] += 1;
    }
    return RepClass(std::move(mult));
}

const Mat& ExplicitModule::generator(int idx) const {
    switch (idx) {
        case 0: return e;
        case 1: return f;
        default: return h;
    }
}

ExplicitModule irrep_matrices_sl2(long long k) {
    if (k < 0) throw ShapeError("highest weight must be non-negative");
    const int d = static_cast<int>(k) + 1;
    ExplicitModule m;
    m.cls = RepClass::irreducible(k);
    m.dim = d;
    m.e = Mat(d, d);
    m.f = Mat(d, d);
    m.h = Mat(d, d);
    for (int j = 0; j < d; ++j) m.h.at(j, j) = rat(k - 2 * j);
    for (int j = 0; j + 1 < d; ++j) m.f.at(j + 1, j) = 1;
    for (int j = 1; j < d; ++j) m.e.at(j - 1, j) = rat(static_cast<long long>(j) * (k - j + 1));
    m.blocks.push_back({k, 0});
    return m;
}

ExplicitModule module_from_class(const RepClass& a) {
    require_effective(a, "module_from_class");
    ExplicitModule m;
    m.cls = a;
    for (const auto& [k, mult] : a.mult())
        for (long long copy = 0; copy < mult; ++copy) {
            m.blocks.push_back({k, m.dim});
            m.dim += static_cast<int>(k) + 1;
        }
    m.e = Mat(m.dim, m.dim);
    m.f = Mat(m.dim, m.dim);
    m.h = Mat(m.dim, m.dim);
    for (const ModuleBlock& block : m.blocks) {
        const ExplicitModule irr = irrep_matrices_sl2(block.k);
        for (int i = 0; i < irr.dim; ++i)
            for (int j = 0; j < irr.dim; ++j) {
                m.e.at(block.offset + i, block.offset + j) = irr.e.at(i, j);
                m.f.at(block.offset + i, block.offset + j) = irr.f.at(i, j);
                m.h.at(block.offset + i, block.offset + j) = irr.h.at(i, j);
            }
    }
    return m;
}

bool module_brackets_hold(const ExplicitModule& m) {
    const Mat he = m.h * m.e - m.e * m.h;
    const Mat hf = m.h * m.f - m.f * m.h;
    const Mat ef = m.e * m.f - m.f * m.e;
    return he == m.e.scaled(Rat(2)) && hf == m.f.scaled(Rat(-2)) && ef == m.h;
}

std::pair<Mat, RepClass> submodule_generated(const ExplicitModule& m, const Mat& vectors) {
    if (vectors.rows() != m.dim && vectors.cols() > 0)
        throw ShapeError("submodule_generated: vectors live in the wrong space");
    ColumnSpace space(m.dim);
    std::vector<std::vector<Rat>> basis, frontier;
    for (int j = 0; j < vectors.cols(); ++j) {
        auto v = vectors.col(j);
        if (space.add(v)) {
            basis.push_back(v);
            frontier.push_back(v);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Rat>> next;
        for (const auto& v : frontier) {
            Mat col(m.dim, 1);
            for (int i = 0; i < m.dim; ++i) col.at(i, 0) = v[static_cast<size_t>(i)];
            for (int g = 0; g < 3; ++g) {
                const Mat image = m.generator(g) * col;
                auto w = image.col(0);
                if (space.add(w)) {
                    basis.push_back(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    Mat span(m.dim, static_cast<int>(basis.size()));
    for (int j = 0; j < span.cols(); ++j)
        for (int i = 0; i < m.dim; ++i) span.at(i, j) = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];

    // class from the h-eigenvalue multiset of the submodule
    std::vector<long long> weights;
    std::vector<long long> candidates;
    for (const ModuleBlock& b : m.blocks)
        for (long long j = 0; j <= b.k; ++j) candidates.push_back(b.k - 2 * j);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (long long lambda : candidates) {
        if (span.cols() == 0) break;
        Mat shifted = m.h;
        for (int i = 0; i < m.dim; ++i) shifted.at(i, i) -= rat(lambda);
        const long long mult = span.cols() - rank(shifted * span);
        for (long long c = 0; c < mult; ++c) weights.push_back(lambda);
    }
    if (static_cast<long long>(weights.size()) != span.cols())
        throw ShapeError("submodule is not h-stable"); // cannot happen for closed spans
    return {span, decompose_by_weights(weights)};
}

} // namespace strata
