#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strata/complexes.hpp"
#include "strata/errors.hpp"
#include "strata/prng.hpp"

#include "../support/sampling.hpp"

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

// The running two-degree example: dims (2,2), d0 = [[0,1],[0,0]].
ComplexStructure example_c1() {
    return ComplexStructure({2, 2}, {mat2(0, 1, 0, 0)});
}

ComplexStructure zero_complex(DimVec dims) {
    std::vector<Mat> diffs;
    for (size_t i = 0; i + 1 < dims.size(); ++i)
        diffs.emplace_back(static_cast<int>(dims[i + 1]), static_cast<int>(dims[i]));
    return ComplexStructure(std::move(dims), std::move(diffs));
}

} // namespace

TEST_CASE("complex validation") {
    CHECK(ComplexStructure::validate({2, 3}, {Mat(3, 2)}).ok);
    CHECK(ComplexStructure::validate({2, 2}, {mat2(0, 1, 0, 0)}).ok);

    // d^1 d^0 != 0 on dims (1,1,1)
    Mat one(1, 1);
    one.at(0, 0) = 1;
    auto report = ComplexStructure::validate({1, 1, 1}, {one, one});
    REQUIRE_FALSE(report.ok);
    CHECK(report.violations[0].rule == "d2-zero");
    CHECK(report.violations[0].degree == 0);
    CHECK_THROWS_AS(ComplexStructure({1, 1, 1}, {one, one}), ShapeError);

    // shape violation
    CHECK_FALSE(ComplexStructure::validate({2, 3}, {Mat(2, 2)}).ok);
}

TEST_CASE("homology profiles") {
    auto zero = zero_complex({2, 3});
    auto pz = homology_profile(zero);
    CHECK(pz.h == DimVec{2, 3});

    auto p = homology_profile(example_c1());
    CHECK(p.z == DimVec{1, 2});
    CHECK(p.b == DimVec{0, 1});
    CHECK(p.h == DimVec{1, 1});

    Mat one(1, 1);
    one.at(0, 0) = 1;
    auto exact = ComplexStructure({1, 1}, {one});
    CHECK(homology_profile(exact).h == DimVec{0, 0});
}

TEST_CASE("homology closed form z_i = chi_{i-1}(dims) + chi_i(h)") {
    auto c = example_c1();
    auto p = homology_profile(c);
    for (long long i = 0; i <= c.top_degree(); ++i)
        CHECK(p.z[i] == chi(i - 1, c.dims()) + chi(i, p.h));
}

TEST_CASE("adapted decomposition") {
    auto c = example_c1();
    auto ad = adapted_decomposition(c);
    // C^0 = span{e2}, H^0 = span{e1}, B^1 = span{f1}, H^1 = span{f2}
    REQUIRE(ad.c[0].cols() == 1);
    CHECK(ad.c[0].at(1, 0) == 1);
    REQUIRE(ad.h[0].cols() == 1);
    CHECK(ad.h[0].at(0, 0) == 1);
    REQUIRE(ad.b[1].cols() == 1);
    CHECK(ad.b[1].at(0, 0) == 1);
    REQUIRE(ad.h[1].cols() == 1);
    CHECK(ad.h[1].at(1, 0) == 1);

    auto zc = zero_complex({3, 2});
    auto adz = adapted_decomposition(zc);
    CHECK(adz.c[0].cols() == 0);
    CHECK(adz.h[0].cols() == 3);
    CHECK(adz.h[1].cols() == 2);

    Mat one(1, 1);
    one.at(0, 0) = 1;
    auto exact = ComplexStructure({1, 1}, {one});
    auto ade = adapted_decomposition(exact);
    CHECK(ade.h[0].cols() == 0);
    CHECK(ade.h[1].cols() == 0);
}

TEST_CASE("adapted basis puts d in block normal form") {
    Prng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexStructure c = strata::testsupport::random_complex(rng, 4, 3);
        auto ad = adapted_decomposition(c);
        for (int i = 0; i <= c.top_degree(); ++i) {
            Mat basis = ad.basis_matrix(i);
            REQUIRE(basis.cols() == c.dim_at(i));
            CHECK(rank(basis) == basis.cols());
            if (i < c.top_degree()) {
                // d kills B and H blocks, maps C onto the next B block
                CHECK((c.diff(i) * ad.b[i]).is_zero());
                CHECK((c.diff(i) * ad.h[i]).is_zero());
                Mat image = c.diff(i) * ad.c[i];
                CHECK(image == ad.b[i + 1]);
            }
        }
        // the matrix of d in the adapted bases is the 0/1 normal form
        for (int i = 0; i < c.top_degree(); ++i) {
            if (c.dim_at(i) == 0 || c.dim_at(i + 1) == 0) continue;
            const Mat normal = inverse(ad.basis_matrix(i + 1)) * c.diff(i) * ad.basis_matrix(i);
            const int brows = ad.b[i + 1].cols();
            const int bh = ad.b[i].cols() + ad.h[i].cols();
            for (int row = 0; row < normal.rows(); ++row)
                for (int col = 0; col < normal.cols(); ++col) {
                    const Rat expected = (row < brows && col >= bh && col - bh == row) ? 1 : 0;
                    CHECK(normal.at(row, col) == expected);
                }
        }
    }
}

TEST_CASE("chain map validation and rank profiles") {
    auto c = example_c1();
    auto id = ChainMap(c, c, {Mat::identity(2), Mat::identity(2)});
    auto rp = rank_profiles(id);
    CHECK(rp.rk == DimVec{2, 2});
    CHECK(rp.hrk == DimVec{1, 1});

    auto zero = ChainMap(c, c, {Mat(2, 2), Mat(2, 2)});
    auto rpz = rank_profiles(zero);
    CHECK(rpz.rk == DimVec{0, 0});
    CHECK(rpz.hrk == DimVec{0, 0});

    // f0 = id, f1 = [[1,0],[0,0]] commutes and has profile (2,1),(1,0)
    auto f = ChainMap(c, c, {Mat::identity(2), mat2(1, 0, 0, 0)});
    auto rpf = rank_profiles(f);
    CHECK(rpf.rk == DimVec{2, 1});
    CHECK(rpf.hrk == DimVec{1, 0});

    // non-commuting components rejected with a degree-indexed report
    auto report = ChainMap::validate(c, c, {mat2(0, 0, 1, 0), Mat(2, 2)});
    REQUIRE_FALSE(report.ok);
    CHECK(report.violations[0].rule == "commutation");
    CHECK(report.violations[0].degree == 0);
}

TEST_CASE("fkernel dimensions") {
    auto c = example_c1();
    auto id = ChainMap(c, c, {Mat::identity(2), Mat::identity(2)});
    CHECK(fkernel_dims(id) == DimVec{1, 2});

    auto zero = ChainMap(c, c, {Mat(2, 2), Mat(2, 2)});
    CHECK(fkernel_dims(zero) == DimVec{0, 0});

    auto f = ChainMap(c, c, {Mat::identity(2), mat2(1, 0, 0, 0)});
    CHECK(fkernel_dims(f) == DimVec{1, 1});

    // filtration identity: dim f^i(ker d^i) = chi_{i-1}(rk) + chi_i(hrk)
    for (const auto& g : {id, zero, f}) {
        auto rp = rank_profiles(g);
        auto fk = fkernel_dims(g);
        for (long long i = 0; i <= g.top_degree(); ++i)
            CHECK(fk[i] == chi(i - 1, rp.rk) + chi(i, rp.hrk));
    }
}

TEST_CASE("hom0 dimension oracle") {
    auto zero21 = zero_complex({2, 1});
    CHECK(hom0_dimension_oracle(zero21, zero21) == 5);

    auto c = example_c1();
    CHECK(hom0_dimension_oracle(c, c) == 5);

    Mat one(1, 1);
    one.at(0, 0) = 1;
    auto exact = ComplexStructure({1, 1}, {one});
    CHECK(hom0_dimension_oracle(exact, exact) == 1);

    CHECK(hom0_space_basis(c, c).size() == 5);
    // every basis element is a valid chain map
    for (const auto& comps : hom0_space_basis(c, c))
        CHECK(ChainMap::validate(c, c, comps).ok);
}

TEST_CASE("claimed hom0 closed form (reported, not asserted)") {
    CHECK(paper_hom0_dimension({2, 1}, {0, 0}, {2, 1}, {0, 0}) == 5);
    CHECK(paper_hom0_dimension({1, 1}, {1, 0}, {1, 1}, {1, 0}) == 3);
    CHECK(paper_hom0_dimension({0, 0}, {1, 0}, {0, 0}, {1, 0}) == 1);
}

TEST_CASE("split closed form agrees with the solver") {
    auto c = example_c1();
    auto zero21 = zero_complex({2, 1});
    Mat one(1, 1);
    one.at(0, 0) = 1;
    auto exact = ComplexStructure({1, 1}, {one});

    for (const auto* a : {&c, &zero21}) (void)a;
    const ComplexStructure cases[] = {c, zero21, exact};
    for (const auto& a : cases)
        for (const auto& b : cases) {
            if (a.top_degree() != b.top_degree()) continue;
            CHECK(split_hom0_dimension(homology_profile(a), homology_profile(b)) ==
                  hom0_dimension_oracle(a, b));
        }
}

TEST_CASE("filtration identities fail off the generic strata (pinned)") {
    // f kills degree 0 and pushes the homology generator into a boundary.
    // Such maps satisfy delta f = f d but escape the closed-form filtration
    // identities: dim f(ker d) exceeds chi_{i-1}(rk) + chi_i(hrk), and
    // chi_n(rk) != chi_n(hrk).  The identities are exact on every witness
    // orbit (tested in the acceptance suite); this map is in no such orbit.
    auto c = example_c1();
    auto f = ChainMap(c, c, {Mat(2, 2), mat2(0, 1, 0, 0)});
    auto rp = rank_profiles(f);
    CHECK(rp.rk == DimVec{0, 1});
    CHECK(rp.hrk == DimVec{0, 0});
    CHECK(fkernel_dims(f) == DimVec{0, 1});
    CHECK(chi(0, rp.rk) + chi(1, rp.hrk) == 0); // closed form says 0, truth is 1
    CHECK(chi(1, rp.rk) == 1);
    CHECK(chi(1, rp.hrk) == 0);
}

TEST_CASE("euler identity chi_n(dim) = chi_n(h)") {
    auto c = example_c1();
    auto p = homology_profile(c);
    CHECK(chi(c.top_degree(), c.dims()) == chi(c.top_degree(), p.h));
}
