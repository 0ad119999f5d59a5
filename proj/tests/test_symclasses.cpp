#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitquant/catalog.hpp"
#include "orbitquant/symclasses.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

using namespace orbitquant;

namespace {

Rat factorial(long n) {
    Rat r(1);
    for (long k = 2; k <= n; ++k) r *= Rat(k);
    return r;
}

GaussPoly sample_gp(std::mt19937& rng, int dim, double bc_range = 0.4) {
    std::uniform_real_distribution<double> ua(0.7, 1.4), ubc(-bc_range, bc_range);
    std::vector<GaussAxis> axes;
    for (int k = 0; k < dim; ++k) axes.push_back({ua(rng), ubc(rng), ubc(rng)});
    return gauss_nd(axes);
}

} // namespace

// ---------------------------------------------------------------------------
// Weighted multi-indices and Taylor polynomials
// ---------------------------------------------------------------------------

TEST_CASE("hom_length uses the dilation weights") {
    LieAlgebraSpec g = *catalog_make("center2", "1");
    CHECK(hom_length(g, {1, 0, 0, 0}) == 1);
    CHECK(hom_length(g, {0, 0, 1, 0}) == 2);
    CHECK(hom_length(g, {1, 1, 1, 1}) == 6);
    CHECK(multi_order({1, 1, 1, 1}) == 4);
    // enumeration: degree-4 exponents with weights (1,1,2,2)
    CHECK(hom_multi_indices(g, 4).size() == 14);
    LieAlgebraSpec ab = *catalog_make("abelian", "2");
    for (long d = 0; d <= 5; ++d)
        CHECK(long(hom_multi_indices(ab, d).size()) == d + 1);
}

TEST_CASE("taylor polynomials on abelian groups are x^alpha / alpha!") {
    LieAlgebraSpec g = *catalog_make("abelian", "3");
    auto qs = taylor_polynomials(g, 4);
    for (const auto& [alpha, q] : qs) {
        Rat fact(1);
        for (unsigned v : alpha) fact *= factorial(v);
        PolyQ expect = monomial(alpha).scaled(Rat(1) / fact);
        CHECK(q == expect);
    }
}

TEST_CASE("taylor polynomial of the Heisenberg central direction") {
    // Hand derivation with X_Q = d_q - (p/2) d_s, X_P = d_p + (q/2) d_s:
    // the unique degree-2 solution dual to beta = (0,0,1) is s - qp/2.
    LieAlgebraSpec g = *catalog_make("heis1");
    auto qs = taylor_polynomials(g, 2);
    PolyQ expect;
    expect.add_term({0, 0, 1}, Rat(1));
    expect.add_term({1, 1, 0}, Rat(-1, 2));
    CHECK(qs.at({0, 0, 1}) == expect);
}

TEST_CASE("duality (X^beta q_alpha)(e) = delta re-verified by differentiation") {
    for (const char* id : {"abelian", "heis1", "center2"}) {
        LieAlgebraSpec g = id == std::string("abelian") ? *catalog_make(id, "2")
                                                        : *catalog_make(id, "1");
        InvariantFields flds = left_invariant_fields(g);
        auto qs = taylor_polynomials(g, 4);
        std::vector<int> w(g.weights);
        for (const auto& [alpha, q] : qs) {
            // homogeneous of the right weighted degree
            if (!q.is_zero() && multi_order(alpha) > 0)
                CHECK(q.weighted_degree(w) == hom_length(g, alpha));
            for (const MultiIndex& beta : hom_multi_indices(g, hom_length(g, alpha))) {
                Rat got = apply_xbeta(flds, beta, q).coefficient({});
                CHECK(got == (beta == alpha ? Rat(1) : Rat(0)));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Difference operators
// ---------------------------------------------------------------------------

TEST_CASE("gamma_diff: q = 1 is the identity") {
    std::mt19937 rng(51);
    GridND xg{{Grid1D{32, 8.0}, Grid1D{32, 8.0}}};
    GridND dual = dual_grid(xg);
    GaussPoly b = sample_gp(rng, 2);
    std::vector<cd> samples(dual.total());
    for (long i = 0; i < dual.total(); ++i) samples[i] = b.eval(dual.point(i));
    auto out = gamma_diff(xg, PolyQ::constant(Rat(1)), samples);
    double err = 0;
    for (long i = 0; i < dual.total(); ++i)
        err = std::max(err, std::abs(out[i] - samples[i]));
    CHECK(err < 1e-8);
}

TEST_CASE("gamma_diff: coordinate polynomial acts as i d/dXX_j") {
    std::mt19937 rng(52);
    GridND xg{{Grid1D{64, 10.0}}};
    GridND dual = dual_grid(xg);
    GaussPoly b = sample_gp(rng, 1);
    std::vector<cd> samples(dual.total());
    for (long i = 0; i < dual.total(); ++i) samples[i] = b.eval(dual.point(i));
    auto out = gamma_diff(xg, PolyQ::variable(0), samples);
    GaussPoly expect = b.dx(0).scaled(cd(0, 1)); // i dB/dXX
    double err = 0, scale = 0;
    for (long i = 0; i < dual.total(); ++i) {
        double xi = dual.point(i)[0];
        if (std::abs(xi) > 6) continue; // polynomial growth x grid edge
        err = std::max(err, std::abs(out[i] - expect.eval({xi})));
        scale = std::max(scale, std::abs(expect.eval({xi})));
    }
    CHECK(err < 1e-6 * scale);
}

TEST_CASE("gamma_diff: sampled version matches the closed form") {
    std::mt19937 rng(53);
    GridND xg{{Grid1D{48, 9.0}, Grid1D{48, 9.0}}};
    GridND dual = dual_grid(xg);
    GaussPoly b = sample_gp(rng, 2);
    PolyQ q;
    q.add_term({1, 0}, Rat(1, 2));
    q.add_term({0, 2}, Rat(1, 3));
    std::vector<cd> samples(dual.total());
    for (long i = 0; i < dual.total(); ++i) samples[i] = b.eval(dual.point(i));
    auto out = gamma_diff(xg, q, samples);
    GaussPoly closed = gamma_diff_closed(q, b);
    double err = 0, scale = 0;
    for (long i = 0; i < dual.total(); ++i) {
        auto xi = dual.point(i);
        if (std::abs(xi[0]) > 6 || std::abs(xi[1]) > 6) continue;
        err = std::max(err, std::abs(out[i] - closed.eval(xi)));
        scale = std::max(scale, std::abs(closed.eval(xi)));
    }
    CHECK(err < 1e-6 * scale);
}

TEST_CASE("gamma_diff: multiplication operators compose, Gamma_q Gamma_q' = Gamma_qq'") {
    std::mt19937 rng(54);
    GridND xg{{Grid1D{48, 9.0}, Grid1D{48, 9.0}}};
    GridND dual = dual_grid(xg);
    GaussPoly b = sample_gp(rng, 2);
    PolyQ q1 = PolyQ::variable(0), q2;
    q2.add_term({0, 1}, Rat(1));
    q2.add_term({}, Rat(1, 4));
    std::vector<cd> samples(dual.total());
    for (long i = 0; i < dual.total(); ++i) samples[i] = b.eval(dual.point(i));
    auto two = gamma_diff(xg, q1, gamma_diff(xg, q2, samples));
    auto one = gamma_diff(xg, q1 * q2, samples);
    double err = 0, scale = 0;
    for (long i = 0; i < dual.total(); ++i) {
        auto xi = dual.point(i);
        if (std::abs(xi[0]) > 6 || std::abs(xi[1]) > 6) continue;
        err = std::max(err, std::abs(two[i] - one[i]));
        scale = std::max(scale, std::abs(one[i]));
    }
    CHECK(err < 1e-6 * scale);
}

// ---------------------------------------------------------------------------
// Rockland operators and homogeneity
// ---------------------------------------------------------------------------

TEST_CASE("rockland_build: catalog orders and generating directions") {
    CHECK(rockland_build(*catalog_make("heis1")).order == 2);
    CHECK(rockland_build(*catalog_make("center2", "1")).order == 2);
    CHECK(rockland_build(*catalog_make("dim5a")).order == 12);
    CHECK(rockland_build(*catalog_make("dim5b")).order == 120);
    CHECK(rockland_build(*catalog_make("abelian", "3")).terms.size() == 3);
    CHECK_THROWS(rockland_build(make_filiform(5)));
}

TEST_CASE("sub-Laplacian homogeneity of order 2, exact") {
    LieAlgebraSpec g = *catalog_make("center2", "3/2");
    RocklandSpec rs = rockland_build(g);
    CHECK(!homogeneity_violation(g, rs, Rat(2), 2, 6).has_value());
    CHECK(!homogeneity_violation(g, rs, Rat(3, 2), 2, 6).has_value());
    // wrong claimed order must produce a witness
    auto bad = homogeneity_violation(g, rs, Rat(2), 3, 6);
    REQUIRE(bad.has_value());
    CHECK(!rockland_apply(g, rs, monomial(*bad)).is_zero());
}

TEST_CASE("order-12 operator homogeneity, exact on monomials") {
    LieAlgebraSpec g = *catalog_make("dim5a");
    RocklandSpec rs = rockland_build(g);
    CHECK(!homogeneity_violation(g, rs, Rat(3), 12, 13).has_value());
    // nontrivial witness: R(x_2^6) = -6! exactly (only -X_2^6 survives)
    PolyQ f = monomial({0, 0, 6, 0, 0});
    PolyQ rf = rockland_apply(g, rs, f);
    CHECK(rf == PolyQ::constant(-factorial(6)));
}

TEST_CASE("order-120 operator homogeneity: low degrees plus an exact witness") {
    LieAlgebraSpec g = *catalog_make("dim5b");
    RocklandSpec rs = rockland_build(g);
    CHECK(!homogeneity_violation(g, rs, Rat(2), 120, 10).has_value());
    // f = x_3^60 has weighted degree 120; only X_3^60 survives, giving 60!
    PolyQ f = monomial({0, 0, 0, 60, 0});
    PolyQ rf = rockland_apply(g, rs, f);
    CHECK(rf == PolyQ::constant(factorial(60)));
    // full-degree homogeneity on the witness: R(f . dil_r) = r^120 Rf
    PolyQ fd = f;
    for (int i = 0; i < g.dim; ++i) {
        Rat s(1);
        for (int k = 0; k < g.weights[i]; ++k) s *= Rat(2);
        fd = fd.scale_variable(unsigned(i), s);
    }
    Rat r120(1);
    for (int k = 0; k < 120; ++k) r120 *= Rat(2);
    CHECK(rockland_apply(g, rs, fd) == rf.scaled(r120));
}

// ---------------------------------------------------------------------------
// Spectral weights
// ---------------------------------------------------------------------------

TEST_CASE("represented_t: power zero is the identity, powers compose") {
    Grid1D grid{128, 10.0};
    RepChart rc{RepGroupKind::Center2, 1.0, 0.7, 0.3, grid};
    CMat t0 = represented_t(rc, 0);
    CHECK((t0 - CMat::Identity(grid.m, grid.m)).norm() < 1e-10 * std::sqrt(grid.m));
    CMat tp = represented_t(rc, 1.5), tm = represented_t(rc, -1.5);
    CHECK((tp * tm - CMat::Identity(grid.m, grid.m)).norm() < 1e-8 * std::sqrt(grid.m));
}

TEST_CASE("represented_t commutes with the represented sub-Laplacian") {
    Grid1D grid{128, 10.0};
    RepChart rc{RepGroupKind::Center2, 1.0, 1.0, 0.0, grid};
    CMat t = represented_t(rc, 1.0);
    CMat a = -rep_sub_laplacian(rc);
    CMat herm = 0.5 * (a + a.adjoint());
    CHECK((t * herm - herm * t).norm() < 1e-10 * t.norm() * herm.norm());
}

TEST_CASE("represented_t spectrum follows the oscillator ladder 1 + |lambda|(2k+1)") {
    Grid1D grid{256, 12.0};
    RepChart rc{RepGroupKind::Center2, 1.0, 0.5, 0.5, grid}; // lambda = 1
    CMat t2 = represented_t(rc, 2.0);
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (t2 + t2.adjoint()));
    for (int k = 0; k < 10; ++k) {
        double expect = 1.0 + (2.0 * k + 1.0);
        CHECK(std::abs(es.eigenvalues()(k) - expect) < 1e-6 * expect);
    }
}

// ---------------------------------------------------------------------------
// Seminorms
// ---------------------------------------------------------------------------

namespace {

GaussPoly constant_one_4d() {
    // zero-width axes: evaluates to exactly 1 with zero derivative
    return gauss_nd({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
}

std::vector<std::pair<double, double>> default_nodes() {
    return {{3.0, 0.0}, {2.5, 0.5}, {3.5, -0.5}, {-3.0, 0.2}};
}

} // namespace

TEST_CASE("seminorm: x-derivative of an x-independent symbol vanishes exactly") {
    LieAlgebraSpec g = *catalog_make("center2", "1");
    GaussPoly b = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 3.0}, {1.1, 0, 0}});
    SeminormParams prm;
    prm.beta = {1, 0, 0, 0};
    double v = seminorm_estimate(g, 1.0, constant_one_4d(), b, prm,
                                 {{0.0, 0.0, 0.0, 0.0}, {0.3, -0.2, 0.1, 0.0}},
                                 default_nodes(), Grid1D{64, 10.0});
    CHECK(v == 0.0);
}

TEST_CASE("seminorm: linear in the symbol") {
    std::mt19937 rng(55);
    LieAlgebraSpec g = *catalog_make("center2", "1");
    GaussPoly a = sample_gp(rng, 4);
    GaussPoly b = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 3.0}, {1.1, 0, 0}});
    SeminormParams prm;
    prm.m = 0.5;
    prm.alpha = {0, 1, 0, 0};
    prm.beta = {1, 0, 0, 0};
    prm.gamma = 0.5;
    std::vector<std::vector<double>> xs = {{0, 0, 0, 0}, {0.4, 0.1, -0.2, 0.3}};
    Grid1D grid{64, 10.0};
    double v1 = seminorm_estimate(g, 1.0, a, b, prm, xs, default_nodes(), grid);
    double v2 = seminorm_estimate(g, 1.0, a, b.scaled(2.0), prm, xs,
                                  default_nodes(), grid);
    CHECK(v1 > 0);
    CHECK(std::abs(v2 - 2 * v1) < 1e-12 * v1);
}

TEST_CASE("seminorm: base case is the sup of the quantized operator norms") {
    LieAlgebraSpec g = *catalog_make("center2", "1");
    GaussPoly b = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 3.0}, {1.1, 0, 0}});
    SeminormParams prm; // m = 0, alpha = beta = 0, gamma = 0
    std::vector<std::vector<double>> xs = {{0, 0, 0, 0}};
    double v64 = seminorm_estimate(g, 1.0, constant_one_4d(), b, prm, xs,
                                   default_nodes(), Grid1D{64, 10.0});
    double v96 = seminorm_estimate(g, 1.0, constant_one_4d(), b, prm, xs,
                                   default_nodes(), Grid1D{96, 10.0});
    CHECK(v64 > 0);
    CHECK(std::abs(v96 - v64) < 1e-3 * v64); // grid-stable
    // direct cross-check at one node
    auto nodes = default_nodes();
    double direct = 0;
    for (auto [s, t] : nodes) {
        GaussPoly orbit = fix_trailing_axes(b, {s, t});
        CMat ped = weyl_lambda(Grid1D{64, 10.0}, s + t, [&](double r, double th) {
                       return orbit.eval({r, th});
                   }).a;
        direct = std::max(direct, ped.jacobiSvd().singularValues()(0));
    }
    CHECK(std::abs(v64 - direct) < 1e-12 * direct);
}

TEST_CASE("seminorm: sampled sup is monotone in the sample set") {
    std::mt19937 rng(56);
    LieAlgebraSpec g = *catalog_make("center2", "1");
    GaussPoly a = sample_gp(rng, 4);
    GaussPoly b = gauss_nd({{1.0, 0, 0.1}, {0.9, 0, 0}, {1.2, 0, 3.0}, {1.1, 0, 0}});
    SeminormParams prm;
    prm.alpha = {1, 0, 0, 0};
    Grid1D grid{64, 10.0};
    std::vector<std::vector<double>> xs = {{0, 0, 0, 0}};
    double small = seminorm_estimate(g, 1.0, a, b, prm, xs, default_nodes(), grid);
    xs.push_back({0.5, -0.3, 0.2, 0.1});
    xs.push_back({-0.4, 0.2, 0.0, -0.1});
    double big = seminorm_estimate(g, 1.0, a, b, prm, xs, default_nodes(), grid);
    CHECK(big >= small);
}

// ---------------------------------------------------------------------------
// Intertwining with the operator-side difference operator
// ---------------------------------------------------------------------------

TEST_CASE("difference operator intertwines with the operator-valued transform") {
    // At a fixed central node: quantizing Gamma_q B equals the group Fourier
    // transform of q times the inverse Fourier transform of B (the
    // operator-side multiplication route).
    LieAlgebraSpec g = *catalog_make("center2", "1");
    Grid1D grid{64, 10.0};
    GaussPoly b = gauss_nd({{1.0, 0, 0.2}, {0.9, 0, -0.1}, {2.5, 0, 3.0}, {2.5, 0, 0}});
    GaussPoly binv = b.fourier_all(true);
    // keep sigma away from the central Gaussian peak at 3.0, where the
    // central difference operator would vanish identically on the orbit
    for (auto [s, t] : {std::pair<double, double>{3.4, 0.3}, {2.6, -0.4}}) {
        RepChart rc{RepGroupKind::Center2, 1.0, s, t, grid};
        for (unsigned j : {0u, 2u}) { // a horizontal and a central coordinate
            PolyQ q = PolyQ::variable(j);
            GaussPoly gb = gamma_diff_closed(q, b);
            GaussPoly orbit = fix_trailing_axes(gb, {s, t});
            CMat lhs = weyl_lambda(grid, rc.lambda(), [&](double r, double th) {
                           return orbit.eval({r, th});
                       }).a;
            CMat rhs = group_fourier(rc, binv.mul_poly(to_polyc(q))).a;
            double scale = rhs.cwiseAbs().maxCoeff();
            CHECK(scale > 1e-4); // both routes must be nontrivial
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-6 * scale);
        }
    }
}
