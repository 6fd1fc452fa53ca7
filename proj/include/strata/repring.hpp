#ifndef STRATA_REPRING_HPP
#define STRATA_REPRING_HPP

#include "strata/matrix.hpp"

#include <map>
#include <vector>

namespace strata {

// Multiplicity arithmetic over irreducible types, with full concrete
// support for sl2.  Irreducible types are keyed by a non-negative integer;
// for sl2 the key is the highest weight k and S^k has dimension k + 1.
// The closed forms downstream only ever read multiplicities, so they work
// over any type table; the fusion rules (tensor, symmetric square), weight
// oracle and explicit matrices are sl2-specific.

/// Irreducible dimensions per type key; exactly one type is trivial.
class TypeTable {
public:
    static const TypeTable& sl2();
    TypeTable(std::map<long long, long long> dims, long long trivial_id);

    long long dim_of(long long id) const;
    long long trivial_id() const { return trivial_; }
    bool sl2_table() const { return sl2_; }

private:
    TypeTable() : sl2_(true), trivial_(0) {}
    bool sl2_;
    long long trivial_;
    std::map<long long, long long> dims_;
};

/// Element of the representation ring: finitely supported multiplicity
/// vector.  Negative multiplicities are allowed (it is a ring element);
/// "effective" means all multiplicities are non-negative, i.e. the class of
/// an actual module.
class RepClass {
public:
    RepClass() = default;
    explicit RepClass(std::map<long long, long long> mult);
    static RepClass irreducible(long long id, long long mult = 1);

    const std::map<long long, long long>& mult() const { return mult_; }
    long long mult_of(long long id) const;
    bool effective() const;
    bool is_zero() const { return mult_.empty(); }

    RepClass operator+(const RepClass& o) const;
    RepClass operator-(const RepClass& o) const;
    bool operator==(const RepClass& o) const { return mult_ == o.mult_; }
    bool operator<(const RepClass& o) const { return mult_ < o.mult_; }

    std::string to_string() const;

private:
    std::map<long long, long long> mult_; // canonical: zero entries dropped
};

/// a <= b in the effectiveness order: b - a effective.
bool class_leq(const RepClass& a, const RepClass& b);

/// Per-type minimum of two effective classes.
RepClass class_min(const RepClass& a, const RepClass& b);

long long class_dim(const RepClass& a, const TypeTable& table = TypeTable::sl2());

/// Clebsch-Gordan: S^a (x) S^b = S^{a+b} + S^{a+b-2} + ... + S^{|a-b|},
/// extended bilinearly.  Effective inputs.
RepClass tensor_sl2(const RepClass& a, const RepClass& b);

/// Symmetric square: S^2(S^r) = sum_{m=0..floor(r/2)} S^{2r-4m}, extended by
/// S^2(A + B) = S^2 A + S^2 B + A (x) B.
RepClass sym_square_sl2(const RepClass& a);

/// Character of an effective class as a sorted weight list.
std::vector<long long> class_weights(const RepClass& a);

/// Inverse of the character map: peel highest weights greedily.  Throws
/// ParseError when the multiset is not symmetric under negation or not the
/// character of any effective class.
RepClass decompose_by_weights(std::vector<long long> weights);

/// Concrete module: block-diagonal generator matrices over the integers.
/// Normalization (fixed): basis v_0..v_k per block with h v_j = (k-2j) v_j,
/// f v_j = v_{j+1}, e v_j = j(k-j+1) v_{j-1}; blocks sorted by highest
/// weight ascending, copies of one type consecutive.
struct ModuleBlock {
    long long k;  // highest weight
    int offset;   // first coordinate of the block
};

struct ExplicitModule {
    RepClass cls;
    int dim = 0;
    Mat e, f, h;
    std::vector<ModuleBlock> blocks;

    const Mat& generator(int idx) const; // 0 -> e, 1 -> f, 2 -> h
};

ExplicitModule irrep_matrices_sl2(long long k);
ExplicitModule module_from_class(const RepClass& a);

/// Bracket identities [h,e] = 2e, [h,f] = -2f, [e,f] = h as exact matrix
/// equations.
bool module_brackets_hold(const ExplicitModule& m);

/// Smallest action-stable subspace containing the given column vectors,
/// with its class read off the h-eigenvalue multiset.  Returns the basis
/// (columns) and the class.
std::pair<Mat, RepClass> submodule_generated(const ExplicitModule& m, const Mat& vectors);

} // namespace strata

#endif
