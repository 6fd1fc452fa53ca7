#ifndef STRATA_GSTRATA_HPP
#define STRATA_GSTRATA_HPP

#include "strata/repring.hpp"

namespace strata {

// Equivariant determinantal strata and the Grassmannian of submodules.
// Closed forms only read multiplicity vectors, so they accept any class;
// the oracles act on explicit sl2 modules.

/// dim hom of modules with classes n, m: sum over common types of n_i m_i.
long long hom_g_dim(const RepClass& n, const RepClass& m);

/// Stratum of equivariant maps with image class exactly s.
bool g_stratum_nonempty(const RepClass& n, const RepClass& m, const RepClass& s);
long long g_stratum_dim(const RepClass& n, const RepClass& m, const RepClass& s);

/// Automorphisms: sum of squared multiplicities.
long long aut_g_dim(const RepClass& n);

/// Closure of the rank-s stratum contains the rank-t maps iff t <= s.
bool g_closure_contains(const RepClass& s, const RepClass& t);

/// Submodules of class s inside a module of class n: sum (n_i - s_i) s_i.
long long g_grassmannian_dim(const RepClass& n, const RepClass& s);

/// Solve the equivariance system g X = X g for every generator; exact
/// solution-space dimension.  Ground truth for hom_g_dim.
long long intertwiner_dim_oracle(const ExplicitModule& a, const ExplicitModule& b);

/// Class of the image submodule of an intertwiner.  The image of an
/// equivariant map is already a submodule; the closure step inside is a
/// self-check and throws if it ever adds a vector.
RepClass g_rank_of_map(const ExplicitModule& a, const ExplicitModule& b, const Mat& x);

struct GMapWitness {
    ExplicitModule source, target;
    Mat matrix;
};

/// Per type, an s_i-rank 0/1 selector between multiplicity spaces tensored
/// with the identity of the irreducible.
GMapWitness build_g_map_witness(const RepClass& n, const RepClass& m, const RepClass& s);

/// Classical orbit-tangent computations behind the VERIFIED class: the
/// GL_n x GL_m orbit of a rank-s matrix, and the GL_n orbit on the
/// Grassmannian of s-planes.  Pure linear algebra on concrete matrices.
long long classical_rank_stratum_orbit_dim(long long n, long long m, long long s);
long long classical_grassmannian_orbit_dim(long long n, long long s);

} // namespace strata

#endif
