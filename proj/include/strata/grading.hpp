#ifndef STRATA_GRADING_HPP
#define STRATA_GRADING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace strata {

// Graded integer bookkeeping.  A DimVec lists one value per degree 0..n.
// Out-of-range indices uniformly read as 0, so t_{-1} = 0 and t_{n+1} = 0;
// every module of the library relies on that convention.
using DimVec = std::vector<long long>;

/// Entry with the out-of-range-reads-zero convention (any index allowed).
long long vec_at(const DimVec& t, long long i);

/// True iff every entry is >= 0 (a dimension/rank vector rather than a
/// difference vector).
bool is_nonnegative(const DimVec& t);

/// Componentwise difference a - b, right-padding the shorter vector with
/// zeros.
DimVec vec_sub(const DimVec& a, const DimVec& b);
DimVec vec_add(const DimVec& a, const DimVec& b);

/// Componentwise <=; vectors of unequal length are right-padded with zeros,
/// so complexes of different top degree stay comparable.
bool vec_leq(const DimVec& s, const DimVec& r);

/// Componentwise minimum (the lattice meet for vec_leq), padded with zeros.
DimVec vec_min(const DimVec& a, const DimVec& b);

/// Partial Euler characteristic: t_i - t_{i-1} + t_{i-2} - ... +- t_0.
/// i may exceed the top degree (entries above it read 0); i >= 0 required.
long long chi(long long i, const DimVec& t);

/// Vector of all partial characteristics (chi(0,t), ..., chi(len-1,t)).
DimVec chi_vector(const DimVec& t, size_t len);

std::string vec_to_string(const DimVec& t);

/// All maximal admissible points of the box 0 <= t <= box_upper under the
/// componentwise order.  The output is an antichain, sorted
/// lexicographically, and every admissible point of the box is <= some
/// output point.  Throws ResourceError when the box volume exceeds the cap.
std::vector<DimVec> box_maximal_elements(const DimVec& box_upper,
                                         const std::function<bool(const DimVec&)>& admissible,
                                         long long enumeration_cap = 10000000);

} // namespace strata

#endif
