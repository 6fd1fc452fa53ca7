#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strata/dgla.hpp"
#include "strata/errors.hpp"
#include "strata/prng.hpp"

using namespace strata;

namespace {

RepClass cls(std::map<long long, long long> m) { return RepClass(std::move(m)); }

// E0 = sl2, E1 = S1, E2 = S2, d = 0, f = the symmetric-square projection.
DGLAStructure example_d1() {
    std::vector<Mat> f2(3, Mat(2, 2));
    f2[0].at(0, 0) = 2;
    f2[1].at(0, 1) = 1;
    f2[1].at(1, 0) = 1;
    f2[2].at(1, 1) = 1;
    return make_sl2_dgla(cls({{1, 1}}), cls({{2, 1}}), Mat(), Mat(), f2);
}

Mat colvec(std::vector<long long> entries) {
    Mat out(static_cast<int>(entries.size()), 1);
    for (size_t i = 0; i < entries.size(); ++i) out.at(static_cast<int>(i), 0) = rat(entries[i]);
    return out;
}

} // namespace

TEST_CASE("axiom checker on fixtures") {
    // a Lie algebra is a DGLA concentrated in degree 0
    auto lie = make_sl2_dgla(RepClass(), RepClass(), Mat(), Mat(), {});
    CHECK(check_axioms(lie).ok);

    CHECK(check_axioms(example_d1()).ok);

    // perturb one bracket constant, keeping antisymmetry: Jacobi must fail
    auto broken = lie;
    broken.bracket[2].at(0, 0) = 3;
    broken.bracket[0].at(0, 2) = -3;
    auto report = check_axioms(broken);
    REQUIRE_FALSE(report.ok);
    bool jacobi = false;
    for (const auto& v : report.violations) jacobi = jacobi || v.rule == "jacobi-e0";
    CHECK(jacobi);

    // breaking antisymmetry is caught separately
    auto skew = lie;
    skew.bracket[0].at(2, 1) = 2;
    auto report2 = check_axioms(skew);
    REQUIRE_FALSE(report2.ok);
    CHECK(report2.violations[0].rule == "antisymmetry");

    // single-tensor mutations of D1 are each caught
    auto d1broken = example_d1();
    d1broken.f2[0].at(0, 1) = 1; // no longer symmetric
    CHECK_FALSE(check_axioms(d1broken).ok);
    auto d1broken2 = example_d1();
    d1broken2.f2[0].at(0, 0) = 1; // symmetric but not equivariant
    auto report3 = check_axioms(d1broken2);
    REQUIRE_FALSE(report3.ok);
    CHECK(report3.violations[0].rule == "f-equivariance");
}

TEST_CASE("Maurer-Cartan residual") {
    auto e = example_d1();
    CHECK(mc_residual(e, Mat(2, 1)).is_zero());
    // highest-weight square: f(x,x) = 2 w0
    auto res = mc_residual(e, colvec({1, 0}));
    CHECK(res.at(0, 0) == 2);
    CHECK(res.at(1, 0) == 0);
    CHECK(res.at(2, 0) == 0);

    // d1 = 0, f = 0: the residual vanishes identically
    auto flat = make_sl2_dgla(cls({{1, 1}}), cls({{2, 1}}), Mat(), Mat(), {});
    CHECK(mc_residual(flat, colvec({3, -2})).is_zero());
}

TEST_CASE("twisted differential") {
    auto e = example_d1();
    auto [t0, t1] = twisted_differential(e, Mat(2, 1));
    CHECK(t0 == e.d0);
    CHECK(t1 == e.d1);

    // composite is -(1/2) a . residual, for all x
    Prng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Mat x = colvec({rng.range(-2, 2), rng.range(-2, 2)});
        auto [d0t, d1t] = twisted_differential(e, x);
        const Mat comp = d1t * d0t;
        const Mat res = mc_residual(e, x);
        for (int a = 0; a < 3; ++a) {
            const Mat expected = (e.act2[a] * res).scaled(rat(-1, 2));
            for (int k = 0; k < e.dim2; ++k) CHECK(comp.at(k, a) == expected.at(k, 0));
        }
    }

    // at the only MC point x = 0 of D1 the composite vanishes
    auto [z0, z1] = twisted_differential(e, Mat(2, 1));
    CHECK((z1 * z0).is_zero());
}

TEST_CASE("gauge action") {
    auto e = example_d1();
    // a = 0 fixes everything
    CHECK(gauge_act(e, Mat(3, 1), colvec({1, 1})) == colvec({1, 1}));
    // raising generator on the lowest weight vector (d = 0): truncated exp
    CHECK(gauge_act(e, colvec({1, 0, 0}), colvec({0, 1})) == colvec({1, 1}));
    // x = 0, d = 0: the orbit of 0 is 0
    CHECK(gauge_act(e, colvec({1, 0, 0}), Mat(2, 1)).is_zero());
    // h does not act nilpotently
    CHECK_THROWS_AS(gauge_act(e, colvec({0, 0, 1}), Mat(2, 1)), ResourceError);
}

TEST_CASE("dgla maps") {
    auto e = example_d1();
    DGLAMap id{Mat::identity(3), Mat::identity(2), Mat::identity(3)};
    CHECK(check_dgla_map(id, e, e).ok);
    CHECK(push_forward(id, colvec({2, 5})) == colvec({2, 5}));

    // inclusion of D1 into D1 + trivial E1 summand (S0 block sits first)
    std::vector<Mat> f2big(3, Mat(3, 3));
    f2big[0].at(1, 1) = 2;
    f2big[1].at(1, 2) = 1;
    f2big[1].at(2, 1) = 1;
    f2big[2].at(2, 2) = 1;
    auto big = make_sl2_dgla(cls({{0, 1}, {1, 1}}), cls({{2, 1}}), Mat(), Mat(), f2big);
    CHECK(check_axioms(big).ok);
    DGLAMap incl{Mat::identity(3), Mat(3, 2), Mat::identity(3)};
    incl.phi1.at(1, 0) = 1;
    incl.phi1.at(2, 1) = 1;
    CHECK(check_dgla_map(incl, e, big).ok);

    // residual naturality on sampled points
    Prng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Mat x = colvec({rng.range(-3, 3), rng.range(-3, 3)});
        CHECK(mc_residual(big, push_forward(incl, x)) == incl.phi2 * mc_residual(e, x));
    }

    // a non-equivariant phi1 is itemized
    DGLAMap bad = id;
    bad.phi1.at(0, 1) = 1;
    auto report = check_dgla_map(bad, e, e);
    REQUIRE_FALSE(report.ok);
}

TEST_CASE("shift structure") {
    auto e = example_d1();
    auto same = shift_structure(e, Mat(2, 1));
    CHECK(same.d0 == e.d0);
    CHECK(same.d1 == e.d1);

    Mat x = colvec({1, -2});
    auto shifted = shift_structure(e, x);
    CHECK(shifted.d0 == mu_map(e, x).scaled(Rat(-1)));
    CHECK(shifted.d1 == f_contract(e, x));

    // double shift by x then -x restores the structure
    auto back = shift_structure(shifted, x.scaled(Rat(-1)));
    CHECK(back.d0 == e.d0);
    CHECK(back.d1 == e.d1);

    // residual additivity: res_e(z + x) = res_shift(z) + res_e(x), all z, x
    Prng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Mat zz = colvec({rng.range(-3, 3), rng.range(-3, 3)});
        Mat xx = colvec({rng.range(-3, 3), rng.range(-3, 3)});
        auto sh = shift_structure(e, xx);
        CHECK(mc_residual(e, zz + xx) == mc_residual(sh, zz) + mc_residual(e, xx));
    }
}

TEST_CASE("derivation rank") {
    auto adj = irrep_matrices_sl2(2);
    CHECK(derivation_g_rank(adj, Mat(3, 1)) == RepClass());
    Mat cartan(3, 1);
    cartan.at(1, 0) = 1;
    CHECK(derivation_g_rank(adj, cartan) == cls({{2, 1}}));

    // trivial summand contributes nothing (S0 block first by ordering)
    auto mixed = module_from_class(cls({{0, 1}, {1, 1}}));
    Mat y(3, 1);
    y.at(0, 0) = 1; // trivial coordinate
    y.at(1, 0) = 1; // S1 highest weight
    CHECK(derivation_g_rank(mixed, y) == cls({{1, 1}}));
}

TEST_CASE("E1 stratum dimensions") {
    CHECK(e1_stratum_dim(cls({{1, 2}}), cls({{1, 1}})) == 3);
    CHECK(e1_stratum_dim(cls({{2, 1}}), RepClass()) == 0);
    CHECK(e1_stratum_dim(cls({{2, 1}}), cls({{2, 1}})) == 3);
    // trivial-type support: empty stratum, an answer rather than an error
    CHECK_FALSE(e1_stratum_dim(cls({{0, 2}, {1, 1}}), cls({{0, 1}})).has_value());
    CHECK_THROWS_AS(e1_stratum_dim(cls({{1, 1}}), cls({{1, 2}})), PreconditionError);
    // free trivial coordinates add up
    CHECK(e1_stratum_dim(cls({{0, 2}, {1, 1}}), cls({{1, 1}})) == 2 + (2 + 1 - 1) * 1);
}

TEST_CASE("stratum dimension formulas and the fiber oracle") {
    // worked example: E1 = adjoint, E2 = S2, v = S2
    CHECK(dgla_stratum_dim(cls({{2, 1}}), cls({{2, 1}}), cls({{2, 1}})) == 3);

    CHECK_THROWS_AS(dgla_stratum_dim(cls({{1, 1}}), cls({{2, 1}}), RepClass()), PreconditionError);
    CHECK_THROWS_AS(dgla_stratum_dim(cls({{1, 1}}), cls({{0, 1}}), cls({{1, 1}})), PreconditionError);
    CHECK_THROWS_AS(dgla_stratum_dim(cls({{1, 1}}), cls({{2, 1}}), cls({{2, 1}})), PreconditionError);

    CHECK(dgla0_dim(cls({{1, 1}}), cls({{2, 1}})) == 1);
    CHECK(dgla0_dim(RepClass(), cls({{2, 1}})) == 0);
    CHECK(dgla0_dim(cls({{2, 1}}), cls({{4, 1}})) == 1);

    // fiber oracle: d0 = 0 on the D1 shapes
    auto m1 = module_from_class(cls({{1, 1}}));
    auto m2 = module_from_class(cls({{2, 1}}));
    CHECK(fiber_dim_oracle(m1, m2, Mat(m1.dim, 1)) == 1);

    // E1 = adjoint, E2 = S2, y the Cartan vector: fiber is a point
    auto adj = module_from_class(cls({{2, 1}}));
    Mat cartan(3, 1);
    cartan.at(1, 0) = 1;
    CHECK(fiber_dim_oracle(adj, m2, cartan) == 0);

    // E2 = 0
    auto m0 = module_from_class(RepClass());
    CHECK(fiber_dim_oracle(m1, m0, Mat(m1.dim, 1)) == 0);

    // dgla0 = fiber at d0 = 0 on small class pairs
    for (const auto& e1c : {cls({{1, 1}}), cls({{2, 1}}), cls({{1, 2}}), cls({{0, 1}, {2, 1}})})
        for (const auto& e2c : {cls({{2, 1}}), cls({{4, 1}}), cls({{2, 2}})}) {
            auto a = module_from_class(e1c);
            auto b = module_from_class(e2c);
            CHECK(dgla0_dim(e1c, e2c) == fiber_dim_oracle(a, b, Mat(a.dim, 1)));
        }
}

TEST_CASE("E1 stratum census") {
    // 2x2 coefficient matrices of rank 1 over GF(2): 9 of 16
    CHECK(e1_census_count(2, cls({{1, 2}}), cls({{1, 1}})) == 9);
    CHECK(e1_census_count(3, cls({{1, 2}}), cls({{1, 1}})) == 32);
    auto fit = e1_census_dimension(cls({{1, 2}}), cls({{1, 1}}), {2, 3, 5, 7});
    CHECK(fit.degree == 3);
    CHECK(fit.degree == e1_stratum_dim(cls({{1, 2}}), cls({{1, 1}})));

    // worked example census: adjoint E1, v = S2, degree 3
    auto fit2 = e1_census_dimension(cls({{2, 1}}), cls({{2, 1}}), {2, 3, 5, 7});
    CHECK(fit2.degree == 3);

    // trivial-supported v: empty
    CHECK(e1_census_count(2, cls({{0, 1}}), cls({{0, 1}})) == 0);
}

TEST_CASE("valid structures sampled from the fiber") {
    // build a valid DGLA with d0 = mu_y from a fiber solution and check the
    // axiom checker agrees
    auto m1 = module_from_class(cls({{2, 1}}));
    auto m2 = module_from_class(cls({{4, 1}, {0, 1}}));
    Mat y(m1.dim, 1);
    y.at(0, 0) = 1;
    y.at(1, 0) = 1;
    auto fs = make_fiber_system(m1, m2, y);
    const Mat basis = fs.sys.solution_basis();
    REQUIRE(basis.cols() >= 1);
    for (int col = 0; col < basis.cols(); ++col) {
        auto [d1, f2] = fs.decode(basis, col);
        DGLAStructure e = make_sl2_dgla(cls({{2, 1}}), cls({{4, 1}, {0, 1}}), Mat(), d1, f2);
        e.d0 = mu_map(e, y);
        CHECK(check_axioms(e).ok);
    }
}
