#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strata/errors.hpp"
#include "strata/fp.hpp"
#include "strata/grading.hpp"
#include "strata/matrix.hpp"
#include "strata/prng.hpp"
#include "strata/rational.hpp"

using namespace strata;

namespace {

Mat mat2(long a, long b, long c, long d) {
    Mat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("rational literals") {
    CHECK(to_string(parse_rational("3/4")) == "3/4");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("chi partial characteristics") {
    DimVec t{3, 2, 1};
    CHECK(chi(0, t) == 3);
    CHECK(chi(1, t) == -1);
    CHECK(chi(2, t) == 2);
    // indices above the top read as zero
    CHECK(chi(3, t) == -2);
    CHECK(chi(4, t) == 2);

    // telescoping identity chi(i) + chi(i-1) = t_i
    Prng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        DimVec u(4);
        for (auto& x : u) x = rng.range(-5, 5);
        for (long long i = 0; i < 6; ++i)
            CHECK(chi(i, u) + chi(i - 1, u) == vec_at(u, i));
    }
}

TEST_CASE("componentwise order and meet") {
    CHECK(vec_leq({0, 1}, {1, 1}));
    CHECK(vec_leq({1, 1}, {1, 1}));
    CHECK_FALSE(vec_leq({2, 0}, {1, 1}));
    // unequal lengths pad with zeros
    CHECK(vec_leq({1, 1}, {1, 1, 0}));
    CHECK(vec_leq({1, 1, 0}, {1, 1}));
    CHECK_FALSE(vec_leq({1, 1, 2}, {1, 1}));

    CHECK(vec_min({2, 1}, {1, 2}) == DimVec{1, 1});
    CHECK(vec_min({2, 2}, {2, 2}) == DimVec{2, 2});
    CHECK(vec_min({0, 3}, {3, 0}) == DimVec{0, 0});

    // meet property against random lower bounds
    Prng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        DimVec a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = rng.range(0, 4);
            b[i] = rng.range(0, 4);
            c[i] = rng.range(0, 4);
        }
        DimVec m = vec_min(a, b);
        CHECK(vec_leq(m, a));
        CHECK(vec_leq(m, b));
        if (vec_leq(c, a) && vec_leq(c, b)) CHECK(vec_leq(c, m));
    }
}

TEST_CASE("box maximal elements") {
    auto all = [](const DimVec&) { return true; };
    auto none = [](const DimVec&) { return false; };
    CHECK(box_maximal_elements({1, 1}, all) == std::vector<DimVec>{{1, 1}});
    CHECK(box_maximal_elements({1, 1}, none).empty());

    // admissible set for differentials on v = (2,2,1)
    DimVec v{2, 2, 1};
    auto admissible = [&](const DimVec& r) {
        for (long long i = 0; i < 3; ++i) {
            if (vec_at(r, i) > vec_at(v, i + 1)) return false;
            if (vec_at(r, i) + vec_at(r, i - 1) > vec_at(v, i)) return false;
        }
        return true;
    };
    auto maximal = box_maximal_elements({2, 2, 1}, admissible);
    CHECK(maximal == std::vector<DimVec>{{1, 1, 0}, {2, 0, 0}});

    // antichain + covering property on a random predicate
    Prng rng(99);
    auto pred = [&](const DimVec& t) {
        // downward-closed by construction: keep t iff weighted sum small
        return 2 * t[0] + 3 * t[1] + t[2] <= 6;
    };
    auto mx = box_maximal_elements({3, 3, 3}, pred);
    for (const auto& a : mx)
        for (const auto& b : mx)
            if (a != b) CHECK_FALSE(vec_leq(a, b));
    DimVec probe(3);
    for (probe[0] = 0; probe[0] <= 3; ++probe[0])
        for (probe[1] = 0; probe[1] <= 3; ++probe[1])
            for (probe[2] = 0; probe[2] <= 3; ++probe[2])
                if (pred(probe)) {
                    bool covered = false;
                    for (const auto& m : mx) covered = covered || vec_leq(probe, m);
                    CHECK(covered);
                }
    (void)rng;

    CHECK_THROWS_AS(box_maximal_elements({10000, 10000}, all, 1000), ResourceError);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat::identity(2)) == 2);
    CHECK(rank(Mat(2, 2)) == 0);
    CHECK(rank(mat2(0, 1, 0, 0)) == 1);

    Mat frac(2, 3);
    frac.at(0, 0) = parse_rational("1/2");
    frac.at(0, 1) = parse_rational("1/3");
    frac.at(0, 2) = parse_rational("1/6");
    frac.at(1, 0) = parse_rational("3/2");
    frac.at(1, 1) = parse_rational("1");
    frac.at(1, 2) = parse_rational("1/2");
    CHECK(rank(frac) == 1);
}

TEST_CASE("kernel and image bases") {
    CHECK(kernel_basis(Mat(2, 2)).cols() == 2);
    CHECK(image_basis(Mat::identity(3)).cols() == 3);

    Mat m = mat2(0, 1, 0, 0);
    Mat k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 0);
    Mat im = image_basis(m);
    REQUIRE(im.cols() == 1);
    CHECK(im.at(0, 0) == 1);
    CHECK(im.at(1, 0) == 0);
    CHECK((m * k).is_zero());
}

TEST_CASE("rank-nullity and bareiss vs rref on random matrices") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Prng rng(seed * 7 + 1);
        const int rows = static_cast<int>(rng.range(1, 5));
        const int cols = static_cast<int>(rng.range(1, 5));
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = rat(rng.range(-4, 4), rng.range(1, 3));
        const int rk = rank(m);
        CHECK(rk == static_cast<int>(rref(m).second.size()));
        CHECK(kernel_basis(m).cols() + rk == cols);
        CHECK((m * kernel_basis(m)).is_zero());
        CHECK(rank(image_basis(m)) == rk);
    }
}

TEST_CASE("complement basis") {
    Mat sub(2, 1);
    sub.at(0, 0) = 1;
    sub.at(1, 0) = 0;
    Mat c = complement_basis(sub, 2);
    REQUIRE(c.cols() == 1);
    CHECK(c.at(1, 0) == 1);

    Mat diag(2, 1);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    Mat c2 = complement_basis(diag, 2);
    REQUIRE(c2.cols() == 1);
    CHECK(c2.at(0, 0) == 1); // first standard vector is independent of (1,1)

    CHECK(complement_basis(Mat::identity(3), 3).cols() == 0);

    Mat dep(2, 2);
    dep.at(0, 0) = 1;
    dep.at(0, 1) = 2;
    CHECK_THROWS_AS(complement_basis(dep, 2), PreconditionError);
}

TEST_CASE("random matrix of requested rank") {
    CHECK(random_matrix_of_rank(2, 2, 0, 3).is_zero());
    CHECK(rank(random_matrix_of_rank(2, 2, 2, 1)) == 2);
    CHECK(rank(random_matrix_of_rank(3, 2, 2, 7)) == 2);
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        const int r = static_cast<int>(seed % 3);
        CHECK(rank(random_matrix_of_rank(3, 4, r, seed)) == r);
    }
    // reproducible
    CHECK(random_matrix_of_rank(3, 3, 2, 42) == random_matrix_of_rank(3, 3, 2, 42));
    CHECK_THROWS_AS(random_matrix_of_rank(2, 2, 3, 0), PreconditionError);
}

TEST_CASE("homogeneous block systems") {
    // empty constraint set over k unknowns
    LinearSystem free_sys;
    free_sys.add_block(2, 3);
    CHECK(free_sys.solution_dim() == 6);
    CHECK(free_sys.solution_basis().cols() == 6);

    // all unknowns forced to zero
    LinearSystem zero_sys;
    int b = zero_sys.add_block(2, 1);
    for (int i = 0; i < 2; ++i) {
        zero_sys.begin_equation();
        zero_sys.add_term(Rat(1), b, i, 0);
    }
    CHECK(zero_sys.solution_dim() == 0);

    // chain-map system for the two-degree complex with d = [[0,1],[0,0]]
    // against itself: 8 unknowns, constraint rank 3.
    LinearSystem sys;
    const int f0 = sys.add_block(2, 2);
    const int f1 = sys.add_block(2, 2);
    Mat d = mat2(0, 1, 0, 0);
    for (int a = 0; a < 2; ++a)
        for (int bcol = 0; bcol < 2; ++bcol) {
            sys.begin_equation();
            for (int c = 0; c < 2; ++c) sys.add_term(d.at(a, c), f0, c, bcol);
            for (int c = 0; c < 2; ++c) sys.add_term(-d.at(c, bcol), f1, a, c);
        }
    CHECK(sys.solution_dim() == 5);
    Mat basis = sys.solution_basis();
    CHECK(basis.cols() == 5);

    LinearSystem bad;
    int blk = bad.add_block(2, 2);
    bad.begin_equation();
    CHECK_THROWS_AS(bad.add_term(Rat(1), blk, 2, 0), ShapeError);
}

TEST_CASE("prime field helpers") {
    for (int p : {2, 3, 5, 7})
        for (int a = 1; a < p; ++a) CHECK(a * fp_inv(a, p) % p == 1);

    FpMat m(2, 2, 2);
    m.at(0, 1) = 1;
    CHECK(fp_rank(m) == 1);
    FpMat id(3, 2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    CHECK(fp_rank(id) == 2);

    // canonical subspace representatives of GF(2)^2: lines (1,0),(0,1),(1,1)
    int full = 0;
    FpMat line(2, 1, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            line.at(0, 0) = x;
            line.at(0, 1) = y;
            if (fp_is_rref_full(line)) ++full;
        }
    CHECK(full == 3);

    FpMat rhs(2, 2, 1);
    rhs.at(0, 0) = 1;
    rhs.at(1, 0) = 1;
    FpMat basis(2, 2, 1);
    basis.at(0, 0) = 1;
    basis.at(1, 0) = 1;
    FpMat x;
    CHECK(fp_solve(basis, rhs, &x));
    CHECK(x.at(0, 0) == 1);
}
