#ifndef STRATA_DGLA_HPP
#define STRATA_DGLA_HPP

#include "strata/gstrata.hpp"
#include "strata/oracles.hpp"
#include "strata/repring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace strata {

// Differential graded Lie algebra structures on E = E0 + E1 + E2 with E0 a
// Lie algebra acting on E1 and E2.  Tensors are stored explicitly so the
// axiom checker can probe mutations; the sl2 builders fill them from
// explicit modules.  The symmetric bracket E1 x E1 -> E2 is the 3-tensor f
// with f(x, y)_k = x^T F_k y, each F_k symmetric.

struct DGLAStructure {
    int dim0 = 0, dim1 = 0, dim2 = 0;
    std::vector<Mat> bracket; // bracket[a].col(b) = [basis_a, basis_b] in E0
    std::vector<Mat> act1;    // act1[a]: action of basis_a on E1
    std::vector<Mat> act2;    // act2[a]: action of basis_a on E2
    Mat d0;                   // dim1 x dim0
    Mat d1;                   // dim2 x dim1
    std::vector<Mat> f2;      // dim2 symmetric matrices, dim1 x dim1

    // class metadata when built over sl2 (empty otherwise)
    RepClass e1_class, e2_class;
};

/// Structure constants of sl2 in the basis (e, f, h).
std::vector<Mat> sl2_bracket_tensor();

/// DGLA over E0 = sl2 with E1, E2 the explicit modules of the given
/// classes.  Shapes of d0, d1, f2 are validated; the axioms are not (run
/// check_axioms).
DGLAStructure make_sl2_dgla(const RepClass& e1, const RepClass& e2, Mat d0, Mat d1,
                            std::vector<Mat> f2);

/// Per-axiom pass/fail with a violating index witness on failure.
ValidationReport check_axioms(const DGLAStructure& e);

/// mu_x : E0 -> E1, a |-> a.x.
Mat mu_map(const DGLAStructure& e, const Mat& x);
/// f(x, -) : E1 -> E2.
Mat f_contract(const DGLAStructure& e, const Mat& x);
/// f(x, y) as an E2 vector.
Mat f_eval(const DGLAStructure& e, const Mat& x, const Mat& y);

/// 2 d1(x) + f(x, x); its zero set is the Maurer-Cartan variety.  (The
/// 1/2-normalized convention dx + [x,x]/2 has the same zero set.)
Mat mc_residual(const DGLAStructure& e, const Mat& x);

/// (a |-> d0 a - a.x, z |-> d1 z + f(x, z)); the composite equals
/// a |-> -(1/2) a . mc_residual(e, x), so it vanishes exactly on the
/// Maurer-Cartan locus.
std::pair<Mat, Mat> twisted_differential(const DGLAStructure& e, const Mat& x);

/// Gauge action sum_k a^k/k! (x - d0 a/(k+1)).  Requires the action of a on
/// E1 to be nilpotent; otherwise the series does not terminate and a
/// ResourceError is thrown.
Mat gauge_act(const DGLAStructure& e, const Mat& a, const Mat& x);

struct DGLAMap {
    Mat phi0, phi1, phi2;
};

/// Verifies the triple commutes with brackets, actions, differentials and
/// the f tensors; failures itemized per rule.
ValidationReport check_dgla_map(const DGLAMap& phi, const DGLAStructure& src,
                                const DGLAStructure& tgt);

Mat push_forward(const DGLAMap& phi, const Mat& x);

/// (d0 - mu_x, d1 + f(x, -), f).  The residual identity
/// res_e(z + x) = res_shifted(z) + res_e(x) holds for all z, x; when x is
/// Maurer-Cartan, z |-> z + x is a bijection of the MC loci.
DGLAStructure shift_structure(const DGLAStructure& e, const Mat& x);

/// Class of the submodule generated by {a.y : a in E0}: the derivation rank
/// of the inner derivation mu_y.  Trivial summands contribute nothing.
RepClass derivation_g_rank(const ExplicitModule& e1, const Mat& y);

/// Dimension of {y in E1 : derivation rank exactly v}: trivial-isotypic
/// coordinates are unconstrained and each non-trivial isotypic block is a
/// tensor-rank stratum.  Returns nullopt (empty stratum) when v touches the
/// trivial type; throws when v exceeds the multiplicities of n.
std::optional<long long> e1_stratum_dim(const RepClass& n, const RepClass& v,
                                        const TypeTable& table = TypeTable::sl2());

/// Claimed stratum dimension e1_stratum_dim + hom(E1 - v, E2)
/// + hom(S^2 E1, E2).  Refuses v = 0 (use dgla0_dim) and refuses an E2
/// class containing the trivial type (use the fiber oracle): the formula's
/// derivation silently needs E2 without invariants.
long long dgla_stratum_dim(const RepClass& e1, const RepClass& e2, const RepClass& v);

/// Dimension of the d0 = 0 stratum: hom(E1, E2) + hom(S^2 E1, E2).
/// VERIFIED against the fiber oracle.
long long dgla0_dim(const RepClass& e1, const RepClass& e2);

/// Fiber of the stratum over a fixed d0 = mu_y: solution space of the
/// linear system in (d1, f) given by f symmetric + equivariant, the d1
/// Leibniz rule, and d1 d0 = 0.
struct FiberSystem {
    LinearSystem sys;
    int d1_block = 0, f_block = 0;
    int dim1 = 0, dim2 = 0;

    long long pair_index(int i, int j) const; // unknown index of F[i,j], i<=j
    /// Materialize one solution column as (d1, f tensors).
    std::pair<Mat, std::vector<Mat>> decode(const Mat& basis, int col) const;
};

FiberSystem make_fiber_system(const ExplicitModule& e1, const ExplicitModule& e2, const Mat& y);

long long fiber_dim_oracle(const ExplicitModule& e1, const ExplicitModule& e2, const Mat& y);

/// E1 vector with derivation rank exactly v: per type, a 0/1 staircase
/// coefficient pattern on the first copies (first-vectors rule).  Throws
/// when the stratum is empty.
Mat e1_rank_witness(const ExplicitModule& m, const RepClass& v);

/// GF(q) point count of the E1 stratum: free trivial coordinates times
/// per-block counts of rank-s_i matrices (each block enumerated
/// exhaustively, memoized).
Int e1_census_count(int q, const RepClass& n, const RepClass& v,
                    long long point_cap = 1 << 24);

DimensionFit e1_census_dimension(const RepClass& n, const RepClass& v,
                                 const std::vector<int>& primes,
                                 long long point_cap = 1 << 24);

} // namespace strata

#endif
