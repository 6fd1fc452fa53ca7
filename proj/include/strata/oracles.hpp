#ifndef STRATA_ORACLES_HPP
#define STRATA_ORACLES_HPP

#include "strata/varieties.hpp"

#include <map>
#include <utility>
#include <vector>

namespace strata {

// Ground truth independent of every closed form: orbit-tangent dimensions
// of the three group actions, and exhaustive point counts over small prime
// fields with a degree fit.

/// Dimension of the image of (x, y) -> y f - f x, x and y ranging over the
/// degree-0 chain endomorphisms of source and target.  When the group acts
/// transitively on the stratum of f this is the stratum dimension.
long long orbit_dim_chain_map(const ChainMap& f);

/// Dimension of the image of x -> x d - d x over *graded* degree-0
/// endomorphisms (not chain endomorphisms) of the underlying graded space.
long long orbit_dim_differential(const ComplexStructure& c);

/// Dimension of the image of the map sending a chain endomorphism x of the
/// ambient complex to its per-degree induced maps L^i -> W^i / L^i.
long long orbit_dim_subcomplex(const SubcomplexWitness& witness);

struct CensusOptions {
    long long point_cap = 1 << 24; // enumerated tuples per sweep
    int witness_cap = 0;           // matching coordinate tuples to record
};

struct CensusResult {
    int q = 2;
    Int ambient = 0;       // GF(q) points of the ambient parameter space
    long long ambient_dim = 0;
    Int count = 0;         // GF(q) points of the stratum
    // First few matching points, row-major little-endian coordinates.
    std::vector<std::vector<int>> witnesses;
};

/// Exhaustive enumeration over GF(q), q in {2,3,5,7}.  Candidate order is
/// row-major little-endian over field elements.  For subcomplex/chain-map
/// kinds the fixed ambient complexes are the 0/1 canonical witnesses of the
/// query's profiles, reduced mod q.
CensusResult exhaustive_census(int q, const StratumSpec& spec, const CensusOptions& opt = {});

// One enumeration answering every profile query against fixed ambient data.
// The exhaustive A2-style sweeps use these instead of re-enumerating per
// profile.
std::map<DimVec, Int> census_differential_sweep(int q, const DimVec& v, long long point_cap);
std::map<std::pair<DimVec, DimVec>, Int> census_subcomplex_sweep(int q,
                                                                 const ComplexStructure& ambient,
                                                                 long long point_cap);
std::map<std::pair<DimVec, DimVec>, Int> census_chain_map_sweep(int q,
                                                                const ComplexStructure& source,
                                                                const ComplexStructure& target,
                                                                long long point_cap);

struct DimensionFit {
    bool empty = false;
    bool exact = false; // interpolated from more samples than the ambient dimension
    long long degree = -1;
};

/// Degree of the point-count polynomial from (q, count) samples.  With more
/// samples than the ambient dimension the polynomial is interpolated
/// exactly; otherwise the leading exponent is fitted from the counts at the
/// largest prime (flagged approximate).  Polynomiality of the count is a
/// stated assumption, not a theorem of this library.
DimensionFit dimension_by_census(const std::vector<std::pair<int, Int>>& counts,
                                 long long ambient_dim);

/// Census counts for one spec over several primes, fed to the degree fit.
DimensionFit census_dimension(const StratumSpec& spec, const std::vector<int>& primes,
                              const CensusOptions& opt = {});

Int int_pow(long long base, long long exp);

} // namespace strata

#endif
