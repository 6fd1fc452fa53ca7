#include "strata/gstrata.hpp"

#include "strata/errors.hpp"

namespace strata {

namespace {

void require_effective(const RepClass& a, const char* where) {
    if (!a.effective())
        throw PreconditionError("effective", std::string(where) + " needs effective classes");
}

} // namespace

long long hom_g_dim(const RepClass& n, const RepClass& m) {
    require_effective(n, "hom_g_dim");
    require_effective(m, "hom_g_dim");
    long long total = 0;
    for (const auto& [id, mult] : n.mult()) total += mult * m.mult_of(id);
    return total;
}

bool g_stratum_nonempty(const RepClass& n, const RepClass& m, const RepClass& s) {
    require_effective(n, "g_stratum_nonempty");
    require_effective(m, "g_stratum_nonempty");
    require_effective(s, "g_stratum_nonempty");
    return class_leq(s, class_min(n, m));
}

long long g_stratum_dim(const RepClass& n, const RepClass& m, const RepClass& s) {
    if (!g_stratum_nonempty(n, m, s))
        throw PreconditionError("nonempty", "rank class exceeds min(n, m) on some type");
    long long total = 0;
    for (const auto& [id, si] : s.mult())
        total += (n.mult_of(id) + m.mult_of(id) - si) * si;
    return total;
}

long long aut_g_dim(const RepClass& n) {
    require_effective(n, "aut_g_dim");
    long long total = 0;
    for (const auto& [id, mult] : n.mult()) total += mult * mult;
    return total;
}

bool g_closure_contains(const RepClass& s, const RepClass& t) {
    require_effective(s, "g_closure_contains");
    require_effective(t, "g_closure_contains");
    return class_leq(t, s);
}

long long g_grassmannian_dim(const RepClass& n, const RepClass& s) {
    require_effective(n, "g_grassmannian_dim");
    require_effective(s, "g_grassmannian_dim");
    if (!class_leq(s, n))
        throw PreconditionError("s<=n", "submodule class exceeds the ambient class");
    long long total = 0;
    for (const auto& [id, si] : s.mult()) total += (n.mult_of(id) - si) * si;
    return total;
}

long long intertwiner_dim_oracle(const ExplicitModule& a, const ExplicitModule& b) {
    LinearSystem sys;
    const int blk = sys.add_block(b.dim, a.dim);
    // h first: its rows are near-diagonal and keep the echelon sparse
    for (int g : {2, 0, 1}) {
        const Mat& ga = a.generator(g);
        const Mat& gb = b.generator(g);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                sys.begin_equation();
                for (int k = 0; k < b.dim; ++k) sys.add_term(gb.at(i, k), blk, k, j);
                for (int k = 0; k < a.dim; ++k) sys.add_term(-ga.at(k, j), blk, i, k);
            }
    }
    return sys.solution_dim();
}

RepClass g_rank_of_map(const ExplicitModule& a, const ExplicitModule& b, const Mat& x) {
    if (x.rows() != b.dim || x.cols() != a.dim) throw ShapeError("g_rank_of_map: shape mismatch");
    for (int g = 0; g < 3; ++g)
        if (!(b.generator(g) * x - x * a.generator(g)).is_zero())
            throw PreconditionError("equivariant", "matrix does not intertwine the actions");
    const Mat image = image_basis(x);
    auto [span, cls] = submodule_generated(b, image);
    if (span.cols() != image.cols())
        throw ShapeError("image of an intertwiner failed to be a submodule");
    return cls;
}

GMapWitness build_g_map_witness(const RepClass& n, const RepClass& m, const RepClass& s) {
    if (!g_stratum_nonempty(n, m, s))
        throw PreconditionError("nonempty", "rank class exceeds min(n, m) on some type");
    GMapWitness w{module_from_class(n), module_from_class(m), Mat()};
    w.matrix = Mat(w.target.dim, w.source.dim);
    for (const auto& [k, sk] : s.mult()) {
        // j-th copy of type k in the source maps identically onto the j-th
        // copy in the target, for j < s_k
        std::vector<int> src_off, tgt_off;
        for (const ModuleBlock& blk : w.source.blocks)
            if (blk.k == k) src_off.push_back(blk.offset);
        for (const ModuleBlock& blk : w.target.blocks)
            if (blk.k == k) tgt_off.push_back(blk.offset);
        for (long long j = 0; j < sk; ++j)
            for (long long t = 0; t <= k; ++t)
                w.matrix.at(tgt_off[static_cast<size_t>(j)] + static_cast<int>(t),
                            src_off[static_cast<size_t>(j)] + static_cast<int>(t)) = 1;
    }
    return w;
}

long long classical_rank_stratum_orbit_dim(long long n, long long m, long long s) {
    if (s > std::min(n, m)) throw PreconditionError("s<=min(n,m)", "rank out of range");
    Mat x(static_cast<int>(m), static_cast<int>(n));
    for (long long i = 0; i < s; ++i) x.at(static_cast<int>(i), static_cast<int>(i)) = 1;
    LinearSystem sys;
    const int ab = sys.add_block(static_cast<int>(n), static_cast<int>(n));
    const int bb = sys.add_block(static_cast<int>(m), static_cast<int>(m));
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            sys.begin_equation();
            for (int k = 0; k < x.rows(); ++k) sys.add_term(x.at(k, j), bb, i, k);
            for (int k = 0; k < x.cols(); ++k) sys.add_term(-x.at(i, k), ab, k, j);
        }
    return n * n + m * m - sys.solution_dim();
}

long long classical_grassmannian_orbit_dim(long long n, long long s) {
    if (s > n) throw PreconditionError("s<=n", "plane dimension out of range");
    // stabilizer of span{e_0..e_{s-1}} inside gl_n: block upper triangular
    LinearSystem sys;
    const int xb = sys.add_block(static_cast<int>(n), static_cast<int>(n));
    for (long long i = s; i < n; ++i)
        for (long long j = 0; j < s; ++j) {
            sys.begin_equation();
            sys.add_term(Rat(1), xb, static_cast<int>(i), static_cast<int>(j));
        }
    return n * n - sys.solution_dim();
}

} // namespace strata
