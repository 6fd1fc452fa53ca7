#ifndef STRATA_COMPLEXES_HPP
#define STRATA_COMPLEXES_HPP

#include "strata/grading.hpp"
#include "strata/matrix.hpp"

#include <string>
#include <vector>

namespace strata {

/// One failed structural rule, located at a degree, with a human-readable
/// witness (an offending entry or equation).
struct Violation {
    std::string rule;
    int degree = -1;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void fail(const std::string& rule, int degree, const std::string& detail) {
        ok = false;
        violations.push_back({rule, degree, detail});
    }
};

/// Bounded complex (V, d): dims_i = dim V^i for degrees 0..n and
/// differentials d^i : V^i -> V^{i+1}.  The top differential d^n is stored
/// explicitly as a 0 x dims_n matrix so every degree-indexed loop runs
/// uniformly over 0..n.  Valid by construction: d^{i+1} d^i = 0.
class ComplexStructure {
public:
    /// diffs may list degrees 0..n-1 or 0..n (the top one must then be the
    /// empty matrix).
    ComplexStructure(DimVec dims, std::vector<Mat> diffs);

    /// Structural check without construction; collects all violations.
    static ValidationReport validate(const DimVec& dims, const std::vector<Mat>& diffs);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    const DimVec& dims() const { return dims_; }
    long long dim_at(int i) const { return vec_at(dims_, i); }
    /// d^i for 0 <= i <= top_degree (the top one has zero rows).
    const Mat& diff(int i) const { return diffs_[static_cast<size_t>(i)]; }

    /// Ranks of the differentials, one per degree (top entry is 0).
    DimVec rank_vector() const;

    bool operator==(const ComplexStructure& o) const {
        return dims_ == o.dims_ && diffs_ == o.diffs_;
    }

private:
    DimVec dims_;
    std::vector<Mat> diffs_;
};

/// z_i = dim ker d^i, b_i = dim im d^{i-1}, h_i = z_i - b_i.
struct HomologyProfile {
    DimVec z, b, h;
};

HomologyProfile homology_profile(const ComplexStructure& c);

/// Per-degree splitting V^i = B^i + H^i + C^i adapted to d: B^i spans
/// im d^{i-1}, H^i lifts the homology inside ker d^i, and d identifies the
/// C^i basis with the B^{i+1} basis column by column.  All choices follow
/// the deterministic pivot rules of the linear algebra layer.
struct AdaptedBases {
    std::vector<Mat> b, h, c;

    /// [B|H|C] at one degree (an invertible dims_i x dims_i matrix).
    Mat basis_matrix(int i) const { return b[i].hstack(h[i]).hstack(c[i]); }
};

AdaptedBases adapted_decomposition(const ComplexStructure& c);

/// Degree-0 chain map f: comps_i : V^i -> W^i with delta f = f d.
/// Valid by construction.
class ChainMap {
public:
    ChainMap(ComplexStructure source, ComplexStructure target, std::vector<Mat> comps);

    static ValidationReport validate(const ComplexStructure& source,
                                     const ComplexStructure& target,
                                     const std::vector<Mat>& comps);

    const ComplexStructure& source() const { return source_; }
    const ComplexStructure& target() const { return target_; }
    const Mat& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
    int top_degree() const { return source_.top_degree(); }

private:
    ComplexStructure source_, target_;
    std::vector<Mat> comps_;
};

struct RankProfiles {
    DimVec rk;  // rank of f^i
    DimVec hrk; // rank of the induced map H^i(V) -> H^i(W)
};

/// hrk is computed by restricting f^i to ker d^i and reducing modulo
/// im delta^{i-1} (augmented-rank arithmetic; no quotient objects).
RankProfiles rank_profiles(const ChainMap& f);

/// Per-degree dimension of f^i(ker d^i).
DimVec fkernel_dims(const ChainMap& f);

/// Ground truth: the dimension of the space of degree-0 chain maps
/// source -> target, from the homogeneous commutation system
/// delta^i f^i = f^{i+1} d^i.
long long hom0_dimension_oracle(const ComplexStructure& source, const ComplexStructure& target);

/// The linear system whose solutions are the degree-0 chain maps; block i
/// holds f^i.  Exposed for the orbit oracles.
LinearSystem chain_map_system(const ComplexStructure& source, const ComplexStructure& target);

/// Basis of the chain-map space: one entry per basis element, each a full
/// list of per-degree components.
std::vector<std::vector<Mat>> hom0_space_basis(const ComplexStructure& source,
                                               const ComplexStructure& target);

/// Claimed closed form sum_i h_i h'_i + rkd_i rkd'_i, evaluated verbatim.
/// The value is reported, never asserted against the oracle: route any
/// comparison through the harness.
long long paper_hom0_dimension(const DimVec& h, const DimVec& rkd,
                               const DimVec& h2, const DimVec& rkd2);

/// Independent closed form from the elementary-complex decomposition over a
/// field: sum_i (h_i + b_{i+1})(h'_i + b'_i) + b_{i+1} b'_{i+1}.  Agrees
/// with the solver oracle (tested exhaustively).
long long split_hom0_dimension(const HomologyProfile& a, const HomologyProfile& b);

} // namespace strata

#endif
