#include "strata/oracles.hpp"

#include "strata/errors.hpp"
#include "strata/fp.hpp"

#include <algorithm>
#include <functional>

namespace strata {

namespace {

void check_prime(int q) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw PreconditionError("prime-field", "census fields are GF(q) with q in {2,3,5,7}");
}

long long checked_pow_count(int q, long long coords, long long cap) {
    long long points = 1;
    for (long long i = 0; i < coords; ++i) {
        if (points > cap / q) throw ResourceError("census cap exceeded: q^" + std::to_string(coords));
        points *= q;
    }
    return points;
}

FpMat to_fp(const Mat& m, int q) {
    FpMat out(q, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            Int num = x.get_num() % q;
            Int den = x.get_den() % q;
            int n = static_cast<int>(((num.get_si() % q) + q) % q);
            int d = static_cast<int>(((den.get_si() % q) + q) % q);
            if (d == 0) throw ShapeError("entry has denominator divisible by q");
            out.at(i, j) = n * fp_inv(d, q) % q;
        }
    return out;
}

// --- orbit oracles ---------------------------------------------------------

// Equations forcing x to be a chain endomorphism, over the given blocks.
void add_chain_endo_equations(LinearSystem& sys, const ComplexStructure& c,
                              const std::vector<int>& blocks) {
    const int n = c.top_degree();
    for (int i = 0; i < n; ++i) {
        const Mat& d = c.diff(i);
        for (int a = 0; a < static_cast<int>(c.dim_at(i + 1)); ++a)
            for (int b = 0; b < static_cast<int>(c.dim_at(i)); ++b) {
                sys.begin_equation();
                for (int k = 0; k < static_cast<int>(c.dim_at(i)); ++k)
                    sys.add_term(d.at(a, k), blocks[i], k, b);
                for (int k = 0; k < static_cast<int>(c.dim_at(i + 1)); ++k)
                    sys.add_term(-d.at(k, b), blocks[i + 1], a, k);
            }
    }
}

} // namespace

Int int_pow(long long base, long long exp) {
    Int out = 1;
    for (long long i = 0; i < exp; ++i) out *= static_cast<long>(base);
    return out;
}

long long orbit_dim_chain_map(const ChainMap& f) {
    const ComplexStructure& v = f.source();
    const ComplexStructure& w = f.target();
    const int n = v.top_degree();

    const long long end_v = hom0_dimension_oracle(v, v);
    const long long end_w = hom0_dimension_oracle(w, w);

    // Stabilizer condition at f: y f = f x with x, y chain endomorphisms.
    LinearSystem sys;
    std::vector<int> xb(n + 1), yb(n + 1);
    for (int i = 0; i <= n; ++i) xb[i] = sys.add_block(static_cast<int>(v.dim_at(i)), static_cast<int>(v.dim_at(i)));
    for (int i = 0; i <= n; ++i) yb[i] = sys.add_block(static_cast<int>(w.dim_at(i)), static_cast<int>(w.dim_at(i)));
    add_chain_endo_equations(sys, v, xb);
    add_chain_endo_equations(sys, w, yb);
    for (int i = 0; i <= n; ++i) {
        const Mat& fi = f.comp(i);
        for (int a = 0; a < static_cast<int>(w.dim_at(i)); ++a)
            for (int b = 0; b < static_cast<int>(v.dim_at(i)); ++b) {
                sys.begin_equation();
                for (int k = 0; k < static_cast<int>(w.dim_at(i)); ++k)
                    sys.add_term(fi.at(k, b), yb[i], a, k);
                for (int k = 0; k < static_cast<int>(v.dim_at(i)); ++k)
                    sys.add_term(-fi.at(a, k), xb[i], k, b);
            }
    }
    return end_v + end_w - sys.solution_dim();
}

long long orbit_dim_differential(const ComplexStructure& c) {
    const int n = c.top_degree();
    long long graded_end = 0;
    for (int i = 0; i <= n; ++i) graded_end += c.dim_at(i) * c.dim_at(i);

    // Commutant of d inside the graded (not chain) endomorphisms.
    LinearSystem sys;
    std::vector<int> xb(n + 1);
    for (int i = 0; i <= n; ++i) xb[i] = sys.add_block(static_cast<int>(c.dim_at(i)), static_cast<int>(c.dim_at(i)));
    add_chain_endo_equations(sys, c, xb);
    return graded_end - sys.solution_dim();
}

long long orbit_dim_subcomplex(const SubcomplexWitness& witness) {
    const ComplexStructure& w = witness.ambient;
    const int n = w.top_degree();
    const long long end_w = hom0_dimension_oracle(w, w);

    // x stabilizes L iff every quotient coordinate of x(L-basis) vanishes.
    LinearSystem sys;
    std::vector<int> xb(n + 1);
    for (int i = 0; i <= n; ++i) xb[i] = sys.add_block(static_cast<int>(w.dim_at(i)), static_cast<int>(w.dim_at(i)));
    add_chain_endo_equations(sys, w, xb);
    for (int i = 0; i <= n; ++i) {
        const Mat& l = witness.bases[i];
        const int dim = static_cast<int>(w.dim_at(i));
        const int rdim = l.cols();
        if (rdim == dim || rdim == 0) continue; // quotient or subspace trivial
        const Mat comp = complement_basis(l, dim);
        const Mat pinv = inverse(l.hstack(comp));
        for (int t = 0; t < dim - rdim; ++t)
            for (int cidx = 0; cidx < rdim; ++cidx) {
                sys.begin_equation();
                for (int a = 0; a < dim; ++a) {
                    if (pinv.at(rdim + t, a) == 0) continue;
                    for (int b = 0; b < dim; ++b)
                        sys.add_term(pinv.at(rdim + t, a) * l.at(b, cidx), xb[i], a, b);
                }
            }
    }
    return end_w - sys.solution_dim();
}

// --- census enumerations -----------------------------------------------------

namespace {

// All differential tuples over GF(q) on dimension vector v; calls
// fn(diffs, coords) for each tuple with d*d = 0.
void enumerate_differentials(int q, const DimVec& v, long long cap,
                             const std::function<void(const std::vector<FpMat>&, const std::vector<int>&)>& fn) {
    const int n = static_cast<int>(v.size()) - 1;
    long long coords = 0;
    for (int i = 0; i < n; ++i) coords += v[i + 1] * v[i];
    checked_pow_count(q, coords, cap);

    std::vector<int> x(static_cast<size_t>(coords), 0);
    for (;;) {
        std::vector<FpMat> diffs;
        size_t pos = 0;
        for (int i = 0; i < n; ++i) {
            FpMat d(q, static_cast<int>(v[i + 1]), static_cast<int>(v[i]));
            for (int a = 0; a < d.rows; ++a)
                for (int b = 0; b < d.cols; ++b) d.at(a, b) = x[pos++];
            diffs.push_back(std::move(d));
        }
        diffs.emplace_back(q, 0, static_cast<int>(v[n]));
        bool square_zero = true;
        for (int i = 0; i + 1 < n && square_zero; ++i)
            square_zero = fp_is_zero(fp_mul(diffs[i + 1], diffs[i]));
        if (square_zero) fn(diffs, x);

        size_t k = 0;
        while (k < x.size() && x[k] == q - 1) x[k++] = 0;
        if (k == x.size()) break;
        ++x[k];
    }
}

DimVec fp_rank_vector(const std::vector<FpMat>& diffs, int len) {
    DimVec r(len, 0);
    for (int i = 0; i < len && i < static_cast<int>(diffs.size()); ++i) r[i] = fp_rank(diffs[i]);
    return r;
}

DimVec fp_homology_from_ranks(const DimVec& v, const DimVec& r) {
    DimVec h(v.size(), 0);
    for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
        h[i] = vec_at(v, i) - vec_at(r, i) - vec_at(r, i - 1);
    return h;
}

// All subspaces of GF(q)^dim of each dimension, as full-rank RREF matrices
// (rows span), dimension 0 included as the 0 x dim matrix.
std::vector<FpMat> enumerate_subspaces(int q, int dim, long long cap) {
    std::vector<FpMat> out;
    out.emplace_back(q, 0, dim);
    for (int k = 1; k <= dim; ++k) {
        const long long coords = static_cast<long long>(k) * dim;
        checked_pow_count(q, coords, cap);
        std::vector<int> x(static_cast<size_t>(coords), 0);
        for (;;) {
            FpMat m(q, k, dim);
            size_t pos = 0;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < dim; ++b) m.at(a, b) = x[pos++];
            if (fp_is_rref_full(m)) out.push_back(m);
            size_t t = 0;
            while (t < x.size() && x[t] == q - 1) x[t++] = 0;
            if (t == x.size()) break;
            ++x[t];
        }
    }
    return out;
}

struct SubcomplexPoint {
    DimVec dims, homology;
};

// Visits every delta-stable subspace tuple of the ambient complex.
void enumerate_subcomplexes(int q, const ComplexStructure& ambient, long long cap,
                            const std::function<void(const SubcomplexPoint&, const std::vector<const FpMat*>&)>& fn) {
    const int n = ambient.top_degree();
    std::vector<FpMat> delta;
    for (int i = 0; i <= n; ++i) delta.push_back(to_fp(ambient.diff(i), q));

    std::vector<std::vector<FpMat>> lists;
    long long tuples = 1;
    for (int i = 0; i <= n; ++i) {
        lists.push_back(enumerate_subspaces(q, static_cast<int>(ambient.dim_at(i)), cap));
        if (tuples > cap / std::max<long long>(1, static_cast<long long>(lists.back().size())))
            throw ResourceError("census cap exceeded enumerating subspace tuples");
        tuples *= static_cast<long long>(lists.back().size());
    }

    std::vector<size_t> pick(static_cast<size_t>(n) + 1, 0);
    for (;;) {
        std::vector<const FpMat*> tuple;
        for (int i = 0; i <= n; ++i) tuple.push_back(&lists[i][pick[i]]);
        // stability + induced differentials
        bool stable = true;
        std::vector<FpMat> induced;
        for (int i = 0; i < n && stable; ++i) {
            const FpMat lt = [&] {
                FpMat t(q, tuple[i]->cols, tuple[i]->rows);
                for (int a = 0; a < tuple[i]->rows; ++a)
                    for (int b = 0; b < tuple[i]->cols; ++b) t.at(b, a) = tuple[i]->at(a, b);
                return t;
            }();
            const FpMat image = fp_mul(delta[i], lt); // w_{i+1} x r_i
            FpMat next_t(q, tuple[i + 1]->cols, tuple[i + 1]->rows);
            for (int a = 0; a < tuple[i + 1]->rows; ++a)
                for (int b = 0; b < tuple[i + 1]->cols; ++b) next_t.at(b, a) = tuple[i + 1]->at(a, b);
            if (next_t.cols == 0) {
                stable = fp_is_zero(image);
                induced.emplace_back(q, 0, tuple[i]->rows);
            } else {
                FpMat x;
                stable = fp_solve(next_t, image, &x);
                if (stable) induced.push_back(std::move(x));
            }
        }
        if (stable) {
            SubcomplexPoint point;
            point.dims.assign(static_cast<size_t>(n) + 1, 0);
            for (int i = 0; i <= n; ++i) point.dims[i] = tuple[i]->rows;
            DimVec ranks(static_cast<size_t>(n) + 1, 0);
            for (int i = 0; i < n; ++i) ranks[i] = fp_rank(induced[i]);
            point.homology = fp_homology_from_ranks(point.dims, ranks);
            fn(point, tuple);
        }
        size_t k = 0;
        while (k <= static_cast<size_t>(n) && pick[k] + 1 == lists[k].size()) pick[k++] = 0;
        if (k > static_cast<size_t>(n)) break;
        ++pick[k];
    }
}

struct ChainMapAmbient {
    long long hom_dim = 0;
    FpMat basis; // unknowns x hom_dim
    std::vector<FpMat> z_src;   // kernel bases of source differentials
    std::vector<FpMat> b_tgt;   // image bases of target differentials shifted by one
    DimVec v, w;
};

ChainMapAmbient chain_map_ambient(int q, const ComplexStructure& source, const ComplexStructure& target) {
    const int n = source.top_degree();
    if (target.top_degree() != n) throw ShapeError("census: top degrees differ");
    ChainMapAmbient amb;
    amb.v = source.dims();
    amb.w = target.dims();
    long long unknowns = 0;
    std::vector<long long> offset(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        offset[i] = unknowns;
        unknowns += target.dim_at(i) * source.dim_at(i);
    }
    long long rows = 0;
    for (int i = 0; i < n; ++i) rows += target.dim_at(i + 1) * source.dim_at(i);
    FpMat constraints(q, static_cast<int>(rows), static_cast<int>(unknowns));
    std::vector<FpMat> dv, dw;
    for (int i = 0; i <= n; ++i) dv.push_back(to_fp(source.diff(i), q));
    for (int i = 0; i <= n; ++i) dw.push_back(to_fp(target.diff(i), q));
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < static_cast<int>(target.dim_at(i + 1)); ++a)
            for (int b = 0; b < static_cast<int>(source.dim_at(i)); ++b) {
                for (int k = 0; k < static_cast<int>(target.dim_at(i)); ++k) {
                    const int idx = static_cast<int>(offset[i] + static_cast<long long>(k) * source.dim_at(i) + b);
                    constraints.at(row, idx) = (constraints.at(row, idx) + dw[i].at(a, k)) % q;
                }
                for (int k = 0; k < static_cast<int>(source.dim_at(i + 1)); ++k) {
                    const int idx = static_cast<int>(offset[i + 1] + static_cast<long long>(a) * source.dim_at(i + 1) + k);
                    constraints.at(row, idx) = ((constraints.at(row, idx) - dv[i].at(k, b)) % q + q) % q;
                }
                ++row;
            }
    amb.basis = fp_kernel_basis(constraints);
    amb.hom_dim = amb.basis.cols;
    for (int i = 0; i <= n; ++i) amb.z_src.push_back(fp_kernel_basis(dv[i]));
    for (int i = 0; i <= n; ++i)
        amb.b_tgt.push_back(i == 0 ? FpMat(q, static_cast<int>(target.dim_at(0)), 0)
                                   : fp_image_basis(dw[i - 1]));
    return amb;
}

// Visits every GF(q) chain map source -> target with its rank profiles and
// full coordinate tuple.
void enumerate_chain_maps(int q, const ComplexStructure& source, const ComplexStructure& target,
                          long long cap,
                          const std::function<void(const DimVec&, const DimVec&, const std::vector<int>&)>& fn) {
    const int n = source.top_degree();
    const ChainMapAmbient amb = chain_map_ambient(q, source, target);
    checked_pow_count(q, amb.hom_dim, cap);

    std::vector<int> alpha(static_cast<size_t>(amb.hom_dim), 0);
    const long long unknowns = amb.basis.rows;
    for (;;) {
        std::vector<int> coords(static_cast<size_t>(unknowns), 0);
        for (long long u = 0; u < unknowns; ++u) {
            int acc = 0;
            for (int k = 0; k < amb.basis.cols; ++k)
                acc += amb.basis.at(static_cast<int>(u), k) * alpha[static_cast<size_t>(k)];
            coords[static_cast<size_t>(u)] = acc % q;
        }
        // split into per-degree components
        DimVec rk(static_cast<size_t>(n) + 1, 0), hrk(static_cast<size_t>(n) + 1, 0);
        size_t pos = 0;
        for (int i = 0; i <= n; ++i) {
            FpMat f(q, static_cast<int>(amb.w[i]), static_cast<int>(amb.v[i]));
            for (int a = 0; a < f.rows; ++a)
                for (int b = 0; b < f.cols; ++b) f.at(a, b) = coords[pos++];
            rk[i] = fp_rank(f);
            const FpMat fz = fp_mul(f, amb.z_src[i]);
            if (amb.b_tgt[i].cols == 0) {
                hrk[i] = fp_rank(fz);
            } else {
                FpMat joined(q, f.rows, fz.cols + amb.b_tgt[i].cols);
                for (int a = 0; a < f.rows; ++a) {
                    for (int b = 0; b < fz.cols; ++b) joined.at(a, b) = fz.at(a, b);
                    for (int b = 0; b < amb.b_tgt[i].cols; ++b)
                        joined.at(a, fz.cols + b) = amb.b_tgt[i].at(a, b);
                }
                hrk[i] = fp_rank(joined) - fp_rank(amb.b_tgt[i]);
            }
        }
        fn(rk, hrk, coords);

        size_t k = 0;
        while (k < alpha.size() && alpha[k] == q - 1) alpha[k++] = 0;
        if (k == alpha.size()) break;
        ++alpha[k];
    }
}

DimVec padded(const DimVec& t, size_t len) {
    DimVec out(len, 0);
    for (size_t i = 0; i < len; ++i) out[i] = vec_at(t, static_cast<long long>(i));
    return out;
}

} // namespace

std::map<DimVec, Int> census_differential_sweep(int q, const DimVec& v, long long point_cap) {
    check_prime(q);
    std::map<DimVec, Int> hist;
    const int n = static_cast<int>(v.size()) - 1;
    enumerate_differentials(q, v, point_cap, [&](const std::vector<FpMat>& diffs, const std::vector<int>&) {
        hist[fp_rank_vector(diffs, n + 1)] += 1;
    });
    return hist;
}

std::map<std::pair<DimVec, DimVec>, Int> census_subcomplex_sweep(int q, const ComplexStructure& ambient,
                                                                 long long point_cap) {
    check_prime(q);
    std::map<std::pair<DimVec, DimVec>, Int> hist;
    enumerate_subcomplexes(q, ambient, point_cap,
                           [&](const SubcomplexPoint& p, const std::vector<const FpMat*>&) {
                               hist[{p.dims, p.homology}] += 1;
                           });
    return hist;
}

std::map<std::pair<DimVec, DimVec>, Int> census_chain_map_sweep(int q, const ComplexStructure& source,
                                                                const ComplexStructure& target,
                                                                long long point_cap) {
    check_prime(q);
    std::map<std::pair<DimVec, DimVec>, Int> hist;
    enumerate_chain_maps(q, source, target, point_cap,
                         [&](const DimVec& rk, const DimVec& hrk, const std::vector<int>&) {
                             hist[{rk, hrk}] += 1;
                         });
    return hist;
}

CensusResult exhaustive_census(int q, const StratumSpec& spec, const CensusOptions& opt) {
    check_prime(q);
    CensusResult out;
    out.q = q;

    switch (spec.kind) {
        case StratumKind::differential:
        case StratumKind::exact: {
            const DimVec& v = spec.v;
            const int n = static_cast<int>(v.size()) - 1;
            long long coords = 0;
            for (int i = 0; i < n; ++i) coords += v[i + 1] * v[i];
            out.ambient = int_pow(q, coords);
            out.ambient_dim = coords;
            const DimVec target_r = spec.kind == StratumKind::differential
                                        ? padded(spec.r, v.size())
                                        : DimVec{};
            enumerate_differentials(q, v, opt.point_cap,
                                    [&](const std::vector<FpMat>& diffs, const std::vector<int>& coords_vec) {
                                        const DimVec r = fp_rank_vector(diffs, n + 1);
                                        bool match;
                                        if (spec.kind == StratumKind::differential) {
                                            match = r == target_r;
                                        } else {
                                            const DimVec h = fp_homology_from_ranks(v, r);
                                            match = std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; });
                                        }
                                        if (match) {
                                            out.count += 1;
                                            if (static_cast<int>(out.witnesses.size()) < opt.witness_cap)
                                                out.witnesses.push_back(coords_vec);
                                        }
                                    });
            break;
        }
        case StratumKind::subcomplex: {
            const ComplexStructure ambient =
                build_differential_witness(spec.w, chi_vector(vec_sub(spec.w, spec.hw), spec.w.size()));
            out.ambient_dim = 0;
            const DimVec r = padded(spec.r, spec.w.size());
            const DimVec s = padded(spec.s, spec.w.size());
            for (size_t i = 0; i < spec.w.size(); ++i)
                out.ambient_dim += r[i] * (vec_at(spec.w, static_cast<long long>(i)) - r[i]);
            Int ambient_pts = 0;
            enumerate_subcomplexes(q, ambient, opt.point_cap,
                                   [&](const SubcomplexPoint& p, const std::vector<const FpMat*>& tuple) {
                                       if (p.dims == r) ambient_pts += 1; // same Grassmannian product
                                       if (p.dims == r && p.homology == s) {
                                           out.count += 1;
                                           if (static_cast<int>(out.witnesses.size()) < opt.witness_cap) {
                                               std::vector<int> coords;
                                               for (const FpMat* m : tuple)
                                                   coords.insert(coords.end(), m->e.begin(), m->e.end());
                                               out.witnesses.push_back(std::move(coords));
                                           }
                                       }
                                   });
            out.ambient = ambient_pts;
            break;
        }
        case StratumKind::chain_map:
        case StratumKind::quasi_iso: {
            // quasi_iso uses hv as the common homology profile of both sides
            const DimVec& hv = spec.hv;
            const ComplexStructure source =
                build_differential_witness(spec.v, chi_vector(vec_sub(spec.v, hv), spec.v.size()));
            const DimVec hw = spec.kind == StratumKind::chain_map ? spec.hw : spec.hv;
            const ComplexStructure target =
                build_differential_witness(spec.w, chi_vector(vec_sub(spec.w, hw), spec.w.size()));
            const ChainMapAmbient amb = chain_map_ambient(q, source, target);
            out.ambient = int_pow(q, amb.hom_dim);
            out.ambient_dim = amb.hom_dim;
            const size_t len = spec.v.size();
            const DimVec want_s = padded(spec.kind == StratumKind::chain_map ? spec.s : hv, len);
            const bool any_rank = spec.kind == StratumKind::quasi_iso && spec.r.empty();
            const DimVec want_r = padded(spec.r, len);
            enumerate_chain_maps(q, source, target, opt.point_cap,
                                 [&](const DimVec& rk, const DimVec& hrk, const std::vector<int>& coords) {
                                     if (hrk != want_s) return;
                                     if (!any_rank && rk != want_r) return;
                                     out.count += 1;
                                     if (static_cast<int>(out.witnesses.size()) < opt.witness_cap)
                                         out.witnesses.push_back(coords);
                                 });
            break;
        }
    }
    return out;
}

DimensionFit dimension_by_census(const std::vector<std::pair<int, Int>>& counts, long long ambient_dim) {
    DimensionFit fit;
    if (counts.empty()) throw PreconditionError("samples", "dimension_by_census needs at least one count");
    bool all_zero = true;
    for (const auto& [q, c] : counts) all_zero = all_zero && c == 0;
    if (all_zero) {
        fit.empty = true;
        return fit;
    }

    if (static_cast<long long>(counts.size()) > ambient_dim) {
        // Lagrange interpolation over Q; the unique polynomial of degree
        // <= ambient_dim through the samples is the count polynomial.
        const size_t m = counts.size();
        std::vector<Rat> poly(1, Rat(0));
        for (size_t j = 0; j < m; ++j) {
            std::vector<Rat> term(1, Rat(1));
            Rat denom(1);
            for (size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                // term *= (x - q_k)
                std::vector<Rat> next(term.size() + 1, Rat(0));
                for (size_t t = 0; t < term.size(); ++t) {
                    next[t + 1] += term[t];
                    next[t] -= term[t] * rat(counts[k].first);
                }
                term = std::move(next);
                denom *= rat(counts[j].first - counts[k].first);
            }
            const Rat scale = Rat(counts[j].second) / denom;
            if (term.size() > poly.size()) poly.resize(term.size(), Rat(0));
            for (size_t t = 0; t < term.size(); ++t) poly[t] += term[t] * scale;
        }
        long long degree = 0;
        for (size_t t = 0; t < poly.size(); ++t)
            if (poly[t] != 0) degree = static_cast<long long>(t);
        fit.exact = true;
        fit.degree = degree;
        return fit;
    }

    // Underdetermined: round log_Q(count) at the largest prime Q, exactly in
    // integer arithmetic: d = floor(log_Q c), bumped when c^2 > Q^{2d+1}.
    int q_max = 0;
    Int c_max = 0;
    for (const auto& [q, c] : counts)
        if (q > q_max) {
            q_max = q;
            c_max = c;
        }
    if (c_max == 0) {
        fit.empty = true;
        return fit;
    }
    long long d = 0;
    Int power = 1;
    while (power * q_max <= c_max) {
        power *= q_max;
        ++d;
    }
    if (c_max * c_max > power * power * q_max) ++d;
    fit.degree = d;
    fit.exact = false;
    return fit;
}

DimensionFit census_dimension(const StratumSpec& spec, const std::vector<int>& primes,
                              const CensusOptions& opt) {
    std::vector<std::pair<int, Int>> counts;
    long long ambient_dim = 0;
    for (int q : primes) {
        CensusResult r = exhaustive_census(q, spec, opt);
        counts.emplace_back(q, r.count);
        ambient_dim = r.ambient_dim;
    }
    return dimension_by_census(counts, ambient_dim);
}

} // namespace strata
