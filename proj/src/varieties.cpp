#include "strata/varieties.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

namespace {

void require(bool ok, const char* hypothesis, const std::string& detail) {
    if (!ok) throw PreconditionError(hypothesis, std::string("hypothesis '") + hypothesis + "' fails: " + detail);
}

void require_leq(const DimVec& a, const DimVec& b, const char* hypothesis) {
    require(vec_leq(a, b), hypothesis, vec_to_string(a) + " !<= " + vec_to_string(b));
}

void require_profile(const DimVec& dims, const DimVec& h, const char* hypothesis) {
    // (dims, h) is the profile of an actual complex iff chi_i(dims - h) >= 0
    // for every i and the top partial characteristic vanishes (the rank of
    // d^i is chi_i(dims - h), and d^n = 0).
    const DimVec t = vec_sub(dims, h);
    for (long long i = 0; i < static_cast<long long>(t.size()); ++i)
        require(chi(i, t) >= 0, hypothesis,
                "chi_" + std::to_string(i) + "(" + vec_to_string(t) + ") < 0");
    require(chi(static_cast<long long>(t.size()) - 1, t) == 0, hypothesis,
            "chi_n(" + vec_to_string(t) + ") != 0, no complex has this profile");
}

size_t common_len(std::initializer_list<const DimVec*> vs) {
    size_t len = 1;
    for (const DimVec* v : vs) len = std::max(len, v->size());
    return len;
}

Mat first_columns(const Mat& m, long long k) {
    std::vector<int> idx;
    for (int j = 0; j < static_cast<int>(k); ++j) idx.push_back(j);
    return m.cols_subset(idx);
}

} // namespace

const char* stratum_kind_name(StratumKind k) {
    switch (k) {
        case StratumKind::subcomplex: return "subcomplex";
        case StratumKind::chain_map: return "chain-map";
        case StratumKind::differential: return "complexes";
        case StratumKind::quasi_iso: return "quasi-iso";
        case StratumKind::exact: return "exact";
    }
    return "?";
}

// --- subcomplex witness ------------------------------------------------------

ValidationReport SubcomplexWitness::validate() const {
    ValidationReport report;
    const int n = ambient.top_degree();
    if (static_cast<int>(bases.size()) != n + 1) {
        report.fail("shape", -1, "expected one basis per degree 0..n");
        return report;
    }
    for (int i = 0; i <= n; ++i) {
        if (bases[i].rows() != ambient.dim_at(i)) {
            report.fail("shape", i, "basis rows must equal ambient dimension");
            return report;
        }
        if (rank(bases[i]) != bases[i].cols())
            report.fail("independence", i, "basis columns are dependent");
    }
    if (!report.ok) return report;
    for (int i = 0; i < n; ++i) {
        const Mat image = ambient.diff(i) * bases[i];
        if (bases[i + 1].cols() == 0 ? !image.is_zero()
                                     : rank(bases[i + 1].hstack(image)) != bases[i + 1].cols())
            report.fail("stability", i, "delta^i(L^i) is not contained in L^{i+1}");
    }
    return report;
}

DimVec SubcomplexWitness::dims() const {
    DimVec out(bases.size(), 0);
    for (size_t i = 0; i < bases.size(); ++i) out[i] = bases[i].cols();
    return out;
}

ComplexStructure SubcomplexWitness::induced() const {
    const int n = ambient.top_degree();
    std::vector<Mat> diffs;
    for (int i = 0; i < n; ++i) {
        const Mat image = ambient.diff(i) * bases[i];
        if (bases[i + 1].cols() == 0) {
            diffs.emplace_back(0, bases[i].cols());
        } else {
            diffs.push_back(solve_exact(bases[i + 1], image));
        }
    }
    return ComplexStructure(dims(), diffs);
}

// --- subcomplex strata -------------------------------------------------------

bool subcomplex_nonempty(const DimVec& w, const DimVec& h, const DimVec& r, const DimVec& s) {
    require_leq(r, w, "r<=w");
    require_leq(s, h, "s<=h");
    require_leq(h, w, "h<=w");
    require_leq(s, r, "s<=r");
    require_profile(w, h, "chi(w-h)>=0");
    const DimVec rs = vec_sub(r, s);
    const DimVec wh = vec_sub(w, h);
    for (long long i = 0; i < static_cast<long long>(common_len({&w, &h, &r, &s})); ++i) {
        const long long x = chi(i, rs);
        if (x < 0 || x > chi(i, wh)) return false;
    }
    return true;
}

long long paper_dim_subcomplex(const DimVec& w, const DimVec& h, const DimVec& r, const DimVec& s) {
    if (!subcomplex_nonempty(w, h, r, s))
        throw PreconditionError("nonempty", "subcomplex stratum is empty for these profiles");
    const DimVec rs = vec_sub(r, s);
    const DimVec wh = vec_sub(w, h);
    long long total = 0;
    for (long long i = 0; i < static_cast<long long>(common_len({&w, &h, &r, &s})); ++i)
        total += (vec_at(h, i) - vec_at(s, i)) * vec_at(s, i) +
                 (chi(i, wh) - chi(i, rs)) * chi(i, rs);
    return total;
}

SubcomplexWitness build_subcomplex_witness(const ComplexStructure& ambient,
                                           const DimVec& r, const DimVec& s) {
    const HomologyProfile profile = homology_profile(ambient);
    if (!subcomplex_nonempty(ambient.dims(), profile.h, r, s))
        throw PreconditionError("nonempty", "subcomplex stratum is empty for these profiles");
    const AdaptedBases ad = adapted_decomposition(ambient);
    const DimVec rs = vec_sub(r, s);
    const int n = ambient.top_degree();
    std::vector<Mat> bases;
    for (int i = 0; i <= n; ++i) {
        // forced boundary part, then the homology slice, then the cone slice
        Mat basis = first_columns(ad.b[i], chi(i - 1, rs));
        basis = basis.hstack(first_columns(ad.h[i], vec_at(s, i)));
        basis = basis.hstack(first_columns(ad.c[i], chi(i, rs)));
        bases.push_back(basis);
    }
    return SubcomplexWitness{ambient, std::move(bases)};
}

// --- chain-map strata ----------------------------------------------------------

bool map_stratum_nonempty(const DimVec& v, const DimVec& hv, const DimVec& w, const DimVec& hw,
                          const DimVec& r, const DimVec& s) {
    require_leq(r, vec_min(v, w), "r<=min(v,w)");
    require_leq(s, vec_min(hv, hw), "s<=min(hv,hw)");
    require_leq(s, r, "s<=r");
    require_leq(hv, v, "hv<=v");
    require_leq(hw, w, "hw<=w");
    require_profile(v, hv, "chi(v-hv)>=0");
    require_profile(w, hw, "chi(w-hw)>=0");
    const DimVec rs = vec_sub(r, s);
    const DimVec vh = vec_sub(v, hv);
    const DimVec wh = vec_sub(w, hw);
    for (long long i = 0; i < static_cast<long long>(common_len({&v, &w, &r, &s})); ++i) {
        const long long x = chi(i, rs);
        if (x < 0 || x > std::min(chi(i, vh), chi(i, wh))) return false;
    }
    return true;
}

long long paper_dim_map_stratum(const DimVec& v, const DimVec& hv, const DimVec& w,
                                const DimVec& hw, const DimVec& r, const DimVec& s) {
    if (!map_stratum_nonempty(v, hv, w, hw, r, s))
        throw PreconditionError("nonempty", "chain-map stratum is empty for these profiles");
    const DimVec rs = vec_sub(r, s);
    const DimVec vh = vec_sub(v, hv);
    const DimVec wh = vec_sub(w, hw);
    long long total = 0;
    for (long long i = 0; i < static_cast<long long>(common_len({&v, &w, &r, &s})); ++i)
        total += (vec_at(hv, i) + vec_at(hw, i) - vec_at(s, i)) * vec_at(s, i) +
                 (chi(i, vh) + chi(i, wh) - chi(i, rs)) * chi(i, rs);
    return total;
}

ChainMap build_chain_map_witness(const ComplexStructure& source, const ComplexStructure& target,
                                 const DimVec& r, const DimVec& s) {
    const HomologyProfile pv = homology_profile(source);
    const HomologyProfile pw = homology_profile(target);
    if (!map_stratum_nonempty(source.dims(), pv.h, target.dims(), pw.h, r, s))
        throw PreconditionError("nonempty", "chain-map stratum is empty for these profiles");
    const AdaptedBases av = adapted_decomposition(source);
    const AdaptedBases aw = adapted_decomposition(target);
    const DimVec rs = vec_sub(r, s);
    const int n = source.top_degree();
    std::vector<Mat> comps;
    for (int i = 0; i <= n; ++i) {
        // selector on each block pair: first chi_{i-1}(r-s) boundary columns,
        // first s_i homology columns, first chi_i(r-s) cone columns
        Mat p(static_cast<int>(target.dim_at(i)), static_cast<int>(source.dim_at(i)));
        auto fill = [&](long long count, int row_off, int col_off) {
            for (int j = 0; j < static_cast<int>(count); ++j) p.at(row_off + j, col_off + j) = 1;
        };
        fill(chi(i - 1, rs), 0, 0);
        fill(vec_at(s, i), aw.b[i].cols(), av.b[i].cols());
        fill(chi(i, rs), aw.b[i].cols() + aw.h[i].cols(), av.b[i].cols() + av.h[i].cols());
        const Mat f = aw.basis_matrix(i) * p * inverse(av.basis_matrix(i));
        comps.push_back(f);
    }
    return ChainMap(source, target, comps);
}

bool map_closure_contains(const DimVec& r, const DimVec& s, const ChainMap& f) {
    const RankProfiles rp = rank_profiles(f);
    return vec_leq(rp.rk, r) && vec_leq(rp.hrk, s);
}

std::pair<DimVec, DimVec> closure_intersect(const DimVec& r, const DimVec& s,
                                            const DimVec& t, const DimVec& u) {
    return {vec_min(r, t), vec_min(s, u)};
}

// --- quasi-isomorphism locus ----------------------------------------------------

std::vector<DimVec> quasi_iso_components(const DimVec& v, const DimVec& w, const DimVec& h,
                                         long long enumeration_cap) {
    require_leq(h, vec_min(v, w), "h<=min(v,w)");
    require_profile(v, h, "chi(v-h)>=0");
    require_profile(w, h, "chi(w-h)>=0");
    const DimVec box = vec_min(v, w);
    const DimVec vh = vec_sub(v, h);
    const DimVec wh = vec_sub(w, h);
    auto admissible = [&](const DimVec& q) {
        if (!vec_leq(h, q)) return false;
        const DimVec qh = vec_sub(q, h);
        for (long long i = 0; i < static_cast<long long>(q.size()); ++i) {
            const long long x = chi(i, qh);
            if (x < 0 || x > std::min(chi(i, vh), chi(i, wh))) return false;
        }
        return true;
    };
    return box_maximal_elements(box, admissible, enumeration_cap);
}

long long paper_dim_quasi_iso(const DimVec& v, const DimVec& h) {
    require_leq(h, v, "h<=v");
    require_profile(v, h, "chi(v-h)>=0");
    const DimVec vh = vec_sub(v, h);
    long long total = 0;
    for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
        total += vec_at(h, i) * vec_at(h, i) + chi(i, vh) * chi(i, vh);
    return total;
}

// --- differential strata ----------------------------------------------------------

bool complexes_nonempty(const DimVec& v, const DimVec& r) {
    require(is_nonnegative(v) && is_nonnegative(r), "nonnegative", "profiles must be non-negative");
    const size_t len = std::max(v.size(), r.size());
    for (long long i = 0; i < static_cast<long long>(len); ++i)
        require(vec_at(r, i) <= vec_at(v, i + 1), "r_i<=v_{i+1}",
                "degree " + std::to_string(i) + ": " + std::to_string(vec_at(r, i)) + " > " +
                    std::to_string(vec_at(v, i + 1)));
    for (long long i = 0; i < static_cast<long long>(len); ++i)
        if (vec_at(r, i) + vec_at(r, i - 1) > vec_at(v, i)) return false;
    return true;
}

DimVec stratum_homology(const DimVec& v, const DimVec& r) {
    if (!complexes_nonempty(v, r))
        throw PreconditionError("nonempty", "differential stratum is empty for this rank vector");
    DimVec h(v.size(), 0);
    for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
        h[i] = vec_at(v, i) - vec_at(r, i) - vec_at(r, i - 1);
    return h;
}

long long dim_complexes_stratum(const DimVec& v, const DimVec& r) {
    if (!complexes_nonempty(v, r))
        throw PreconditionError("nonempty", "differential stratum is empty for this rank vector");
    long long total = 0;
    for (long long i = 0; i < static_cast<long long>(std::max(v.size(), r.size())); ++i)
        total += (vec_at(v, i) + vec_at(v, i + 1) - vec_at(r, i) - vec_at(r, i - 1)) * vec_at(r, i);
    return total;
}

ComplexStructure build_differential_witness(const DimVec& v, const DimVec& r) {
    if (!complexes_nonempty(v, r))
        throw PreconditionError("nonempty", "differential stratum is empty for this rank vector");
    std::vector<Mat> diffs;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        // d^i sends basis vectors r_{i-1}..r_{i-1}+r_i-1 of V^i to the first
        // r_i basis vectors of V^{i+1}; d^{i+1} starts reading at r_i, so the
        // composite vanishes.
        Mat d(static_cast<int>(v[i + 1]), static_cast<int>(v[i]));
        const long long prev = vec_at(r, static_cast<long long>(i) - 1);
        for (int j = 0; j < static_cast<int>(vec_at(r, static_cast<long long>(i))); ++j)
            d.at(j, static_cast<int>(prev) + j) = 1;
        diffs.push_back(d);
    }
    return ComplexStructure(v, diffs);
}

std::vector<DimVec> complexes_components(const DimVec& v, long long enumeration_cap) {
    require(is_nonnegative(v), "nonnegative", "dimension vector must be non-negative");
    DimVec box(v.size(), 0);
    for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
        box[i] = std::min(vec_at(v, i), vec_at(v, i + 1));
    auto admissible = [&](const DimVec& r) {
        for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
            if (vec_at(r, i) + vec_at(r, i - 1) > vec_at(v, i)) return false;
        return true;
    };
    return box_maximal_elements(box, admissible, enumeration_cap);
}

bool differential_closure_contains(const DimVec& r, const ComplexStructure& c) {
    return vec_leq(c.rank_vector(), r);
}

// --- exact locus --------------------------------------------------------------------

std::optional<DimVec> exact_rank_vector(const DimVec& v) {
    DimVec e(v.size(), 0);
    for (long long i = 0; i < static_cast<long long>(v.size()); ++i) {
        e[i] = chi(i, v);
        if (e[i] < 0) return std::nullopt;
    }
    // The top differential lands in 0, so exactness also needs chi_n(v) = 0
    // (the Euler identity kills any complex with chi_n(v) != 0 and vanishing
    // homology).
    if (e.back() != 0) return std::nullopt;
    return e;
}

std::optional<long long> dim_exact_stratum(const DimVec& v) {
    const auto e = exact_rank_vector(v);
    if (!e) return std::nullopt;
    return dim_complexes_stratum(v, *e);
}

} // namespace strata
