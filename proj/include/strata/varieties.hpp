#ifndef STRATA_VARIETIES_HPP
#define STRATA_VARIETIES_HPP

#include "strata/complexes.hpp"
#include "strata/grading.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace strata {

// The three stratified varieties: subcomplexes of a fixed complex with
// prescribed dimension/homology profile, chain maps with prescribed
// rank/homology-rank profile, and differentials with prescribed rank
// profile; plus the quasi-isomorphism locus and the exact locus.
//
// Dimension formulas come in two classes.  VERIFIED formulas
// (dim_complexes_stratum, the exact locus) are asserted equal to oracles in
// the test suite.  The remaining closed forms (paper_dim_*) are evaluated
// verbatim and only ever *reported* next to oracle values by the comparison
// harness, because hand-checked counterexamples exist; see the harness.

/// Subcomplex L of a fixed ambient complex, one column-span basis per
/// degree.
struct SubcomplexWitness {
    ComplexStructure ambient;
    std::vector<Mat> bases; // bases[i] is dims_i x r_i

    ValidationReport validate() const;
    DimVec dims() const;
    /// The complex (L, delta|_L) in the witness bases.  Requires validity.
    ComplexStructure induced() const;
};

/// Tagged parameter tuple for census queries and JSON specs.
enum class StratumKind { subcomplex, chain_map, differential, quasi_iso, exact };

struct StratumSpec {
    StratumKind kind = StratumKind::differential;
    DimVec v, hv, w, hw, r, s; // used per kind; quasi_iso uses v, w, hv(=h), r(=q)
};

const char* stratum_kind_name(StratumKind k);

// --- subcomplex strata -----------------------------------------------------

/// Non-emptiness criterion 0 <= chi_i(r-s) <= chi_i(w-h).  The standing
/// hypotheses r<=w, s<=h, h<=w, s<=r and realizability chi(w-h)>=0 are
/// preconditions; violating them throws PreconditionError naming the
/// hypothesis.
bool subcomplex_nonempty(const DimVec& w, const DimVec& h, const DimVec& r, const DimVec& s);

/// Claimed closed form sum (h_i - s_i)s_i + (chi_i(w-h) - chi_i(r-s)) chi_i(r-s).
long long paper_dim_subcomplex(const DimVec& w, const DimVec& h, const DimVec& r, const DimVec& s);

/// Constructs L degree by degree in the adapted bases of the ambient,
/// always taking the first basis vectors of each block, so witnesses are
/// reproducible.  The result validates with profile exactly (r, s).
SubcomplexWitness build_subcomplex_witness(const ComplexStructure& ambient,
                                           const DimVec& r, const DimVec& s);

// --- chain-map strata ------------------------------------------------------

bool map_stratum_nonempty(const DimVec& v, const DimVec& hv, const DimVec& w, const DimVec& hw,
                          const DimVec& r, const DimVec& s);

long long paper_dim_map_stratum(const DimVec& v, const DimVec& hv, const DimVec& w,
                                const DimVec& hw, const DimVec& r, const DimVec& s);

/// Block-diagonal 0/1 witness in the adapted bases of both complexes.
ChainMap build_chain_map_witness(const ComplexStructure& source, const ComplexStructure& target,
                                 const DimVec& r, const DimVec& s);

/// Set-theoretic closure test: rank profiles componentwise below (r, s).
bool map_closure_contains(const DimVec& r, const DimVec& s, const ChainMap& f);

/// Meet of two closures: (min(r,t), min(s,u)).
std::pair<DimVec, DimVec> closure_intersect(const DimVec& r, const DimVec& s,
                                            const DimVec& t, const DimVec& u);

// --- quasi-isomorphism locus -----------------------------------------------

/// Maximal rank vectors q with h <= q <= min(v,w) and
/// chi_i(h) <= chi_i(q) <= min(chi_i(v), chi_i(w)); the closures of these
/// strata are the irreducible components of the quasi-isomorphism locus.
std::vector<DimVec> quasi_iso_components(const DimVec& v, const DimVec& w, const DimVec& h,
                                         long long enumeration_cap = 10000000);

/// Claimed dimension sum h_i^2 + chi_i(v-h)^2 of the locus when v = w.
long long paper_dim_quasi_iso(const DimVec& v, const DimVec& h);

// --- differential strata ---------------------------------------------------

/// Precondition r_i <= v_{i+1}; criterion r_i + r_{i-1} <= v_i.
bool complexes_nonempty(const DimVec& v, const DimVec& r);

/// Homology profile v_i - r_i - r_{i-1} of any differential in the stratum.
DimVec stratum_homology(const DimVec& v, const DimVec& r);

/// VERIFIED closed form sum (v_i + v_{i+1} - r_i - r_{i-1}) r_i.
long long dim_complexes_stratum(const DimVec& v, const DimVec& r);

/// 0/1 block differentials with rank profile exactly r.
ComplexStructure build_differential_witness(const DimVec& v, const DimVec& r);

/// Rank vectors of the irreducible components of the variety of complexes.
std::vector<DimVec> complexes_components(const DimVec& v, long long enumeration_cap = 10000000);

bool differential_closure_contains(const DimVec& r, const ComplexStructure& c);

// --- exact locus -------------------------------------------------------------

/// Forced rank vector e_i = chi_i(v) of an exact differential, or nullopt
/// when some chi_i(v) < 0 (then no exact differential exists; this is an
/// answer, not an error).
std::optional<DimVec> exact_rank_vector(const DimVec& v);
std::optional<long long> dim_exact_stratum(const DimVec& v);

} // namespace strata

#endif
