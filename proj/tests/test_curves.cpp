// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <optional>
#include <random>

#include "stci/curves.hpp"
#include "stci/oracle.hpp"

using namespace stci;

namespace {

const char* kGoldenFStarS3 =
    "x3^25 - 6*x0^2*x1*x2^2*x3^19*x4 + 15*x0^6*x2*x3^16*x4^2 - 20*x0^9*x1*x3^12*x4^3 + "
    "15*x0^12*x2^2*x3^7*x4^4 - 6*x0^15*x1*x2*x3^3*x4^5 + x0^19*x4^6";

}  // namespace

TEST_CASE("extension classification") {
    MonomialCurve c346({3, 4, 6});

    ExtensionSpec nice = make_extension(c346, 1, 25);
    CHECK(nice.kind == ExtensionKind::nice);
    CHECK(nice.delta() == 5);
    CHECK(nice.rep.coeffs == std::vector<std::int64_t>{1, 1, 3});
    CHECK(nice.extension_exponents() == std::vector<std::int64_t>{3, 4, 6, 25});

    ExtensionSpec bad = make_extension(MonomialCurve({1, 2, 4}), 3, 4);
    CHECK(bad.kind == ExtensionKind::bad);  // delta(4) = 1 <= 3
    CHECK(bad.extension_exponents() == std::vector<std::int64_t>{3, 6, 12, 4});

    ExtensionSpec nice2 = make_extension(c346, 2, 25);
    CHECK(nice2.kind == ExtensionKind::nice);  // 5 > 2

    CHECK_THROWS_AS(make_extension(c346, 5, 25), Error);  // gcd 5
    try {
        make_extension(c346, 5, 25);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_coprime);
    }
    CHECK_THROWS_AS(make_extension(c346, 1, 2), Error);  // 2 not in the semigroup
}

TEST_CASE("affine relation G") {
    MonomialCurve c346({3, 4, 6});
    CHECK(affine_G(make_extension(c346, 1, 25)).str() == "x1*x2*x3^3 - x4");
    CHECK(affine_G(make_extension(c346, 2, 25)).str() == "x1*x2*x3^3 - x4^2");
    CHECK(affine_G(make_extension(MonomialCurve({2, 3}), 1, 3)).str() == "x2 - x3");

    // gamma_ell carries the ell = 1 relation onto the general one.
    ExtensionSpec e1 = make_extension(c346, 1, 25);
    ExtensionSpec e2 = make_extension(c346, 2, 25);
    CHECK(gamma_ell(affine_G(e1), 2) == affine_G(e2));
}

TEST_CASE("projective binomial F") {
    MonomialCurve c346({3, 4, 6});
    ExtensionSpec nice = make_extension(c346, 1, 25);
    SparsePoly F = projective_F(nice);
    CHECK(F.str() == "x1*x2*x3^3 - x0^4*x4");
    CHECK(F.is_homogeneous());
    CHECK(substitute_one(F, 0) == affine_G(nice));

    // m a multiple of the top generator: pure power form.
    ExtensionSpec top = make_extension(c346, 1, 18);
    CHECK(top.rep.coeffs == std::vector<std::int64_t>{0, 0, 3});
    CHECK(projective_F(top).str() == "x3^3 - x0^2*x4");

    ExtensionSpec bad = make_extension(MonomialCurve({1, 2, 4}), 3, 4);
    SparsePoly Fbad = projective_F(bad);
    CHECK(Fbad.str() == "x4^3 - x0^2*x3");
    CHECK(Fbad.is_homogeneous());
    // Dehomogenization matches G up to sign.
    CHECK(substitute_one(Fbad, 0) == -affine_G(bad));
}

TEST_CASE("parameterizations") {
    Parameterization base = parameterize(MonomialCurve({3, 4, 6}));
    CHECK(base.hom_degree == 6);
    REQUIRE(base.images.size() == 4);
    CHECK(base.images[0] == Monomial({6, 0}));
    CHECK(base.images[1] == Monomial({3, 3}));
    CHECK(base.images[2] == Monomial({2, 4}));
    CHECK(base.images[3] == Monomial({0, 6}));

    Parameterization ext = parameterize(make_extension(MonomialCurve({3, 4, 6}), 1, 25));
    CHECK(ext.hom_degree == 25);
    CHECK(ext.images[0] == Monomial({25, 0}));
    CHECK(ext.images[1] == Monomial({22, 3}));
    CHECK(ext.images[2] == Monomial({21, 4}));
    CHECK(ext.images[3] == Monomial({19, 6}));
    CHECK(ext.images[4] == Monomial({0, 25}));

    // m below the top extension exponent: M = ell * m_n.
    Parameterization badp = parameterize(make_extension(MonomialCurve({1, 2, 4}), 3, 4));
    CHECK(badp.hom_degree == 12);
    CHECK(badp.images[0] == Monomial({12, 0}));
    CHECK(badp.images[1] == Monomial({9, 3}));
    CHECK(badp.images[2] == Monomial({6, 6}));
    CHECK(badp.images[3] == Monomial({0, 12}));
    CHECK(badp.images[4] == Monomial({8, 4}));
}

TEST_CASE("base hypersurface shapes") {
    MonomialCurve c346({3, 4, 6});
    auto shapes = xn_shapes(c346);
    REQUIRE(shapes.size() == 2);
    auto eqs = base_equations(c346, shapes);
    CHECK(eqs[0].str() == "x1^2 - x0*x3");
    CHECK(eqs[1].str() == "x2^3 - x0*x3^2");

    MonomialCurve c124({1, 2, 4});
    auto chain = chain_shapes(c124);
    auto chain_eqs = base_equations(c124, chain);
    CHECK(chain_eqs[0].str() == "x1^2 - x0*x2");
    CHECK(chain_eqs[1].str() == "x2^2 - x0*x3");

    CHECK(plane_curve_equation(1, 2).str() == "x1^2 - x0*x2");
    CHECK(plane_curve_equation(2, 5).str() == "x1^5 - x0^3*x2^2");

    for (std::size_t n = 2; n <= 5; ++n) {
        auto rn = rational_normal_equations(n);
        CHECK(rn.size() == n - 1);
        std::vector<std::int64_t> exps(n);
        for (std::size_t i = 0; i < n; ++i) exps[i] = static_cast<std::int64_t>(i + 1);
        Parameterization param = parameterize(exps);
        for (const auto& f : rn) CHECK(vanishes_on(f, param));
    }
}

TEST_CASE("custom base equations are verified") {
    MonomialCurve c346({3, 4, 6});
    std::vector<SparsePoly> good = {SparsePoly::parse("x1^2 - x0*x3", 4)};
    CHECK_NOTHROW(custom_base_equations(c346, good));

    std::vector<SparsePoly> wrong = {SparsePoly::parse("x1^2 - x0*x2", 4)};
    CHECK_THROWS_AS(custom_base_equations(c346, wrong), Error);
    try {
        custom_base_equations(c346, wrong);
    } catch (const Error& e) {
        CHECK(e.code() == errc::does_not_vanish);
    }
}

TEST_CASE("F* golden construction") {
    MonomialCurve c346({3, 4, 6});
    ExtensionSpec spec = make_extension(c346, 1, 25);  // s = 3
    FStarResult res = build_fstar(spec, xn_shapes(c346));

    CHECK(res.p == 6);
    CHECK(res.weights == std::vector<std::int64_t>{3, 4});
    CHECK(res.gamma == 5);
    CHECK(res.alpha == 25);
    CHECK(res.fstar == SparsePoly::parse(kGoldenFStarS3, 5));
    CHECK(res.fstar.term_count() == 7);

    // The pure power term and the x0-divisibility of everything else.
    Monomial lead(5);
    lead[3] = 25;
    CHECK(res.fstar.coeff(lead) == 1);
    for (const auto& [m, c] : res.fstar.terms())
        if (!(m == lead)) CHECK(m[0] > 0);

    // Coefficient sum vanishes: the all-ones point lies on every curve.
    Coeff sum = 0;
    for (const auto& [m, c] : res.fstar.terms()) sum += c;
    CHECK(sum == 0);
}

TEST_CASE("F* largeness gate") {
    MonomialCurve c346({3, 4, 6});
    auto shapes = xn_shapes(c346);

    ExtensionSpec s2 = make_extension(c346, 1, 19);  // s = 2
    CHECK_FALSE(fstar_condition_holds(s2, shapes));
    CHECK_THROWS_AS(build_fstar(s2, shapes), Error);
    try {
        build_fstar(s2, shapes);
    } catch (const Error& e) {
        CHECK(e.code() == errc::condition_fails);
    }

    for (std::int64_t s = 3; s <= 8; ++s) {
        ExtensionSpec sp = make_extension(c346, 1, 6 * s + 7);
        CHECK(fstar_condition_holds(sp, shapes));
        CHECK_NOTHROW(build_fstar(sp, shapes));
    }
}

TEST_CASE("F* degenerate case with nothing to rewrite") {
    // m a multiple of the top generator: every s_i below n is zero, so an
    // empty shape list is allowed and F* collapses to F.
    MonomialCurve c23({2, 3});
    ExtensionSpec spec = make_extension(c23, 1, 9);
    CHECK(spec.rep.coeffs == std::vector<std::int64_t>{0, 3});
    FStarResult res = build_fstar(spec, {});
    CHECK(res.p == 1);
    CHECK(res.gamma == 0);
    CHECK(res.alpha == 3);
    CHECK(res.fstar == projective_F(spec));
}

TEST_CASE("F* shape validation") {
    MonomialCurve c346({3, 4, 6});
    ExtensionSpec spec = make_extension(c346, 1, 25);

    // Missing a shape for a variable with positive coefficient.
    CHECK_THROWS_AS(build_fstar(spec, {}), Error);
    try {
        build_fstar(spec, {});
    } catch (const Error& e) {
        CHECK(e.code() == errc::shape_mismatch);
    }

    // A shape that does not vanish on the base curve.
    std::vector<BinomialShape> off = xn_shapes(c346);
    off[0].b = 2;
    CHECK_THROWS_AS(build_fstar(spec, off), Error);

    // Bad extensions have no F*.
    ExtensionSpec bad = make_extension(MonomialCurve({1, 2, 4}), 3, 4);
    CHECK_THROWS_AS(build_fstar(bad, chain_shapes(MonomialCurve({1, 2, 4}))), Error);
}

TEST_CASE("F* chain form") {
    MonomialCurve c124({1, 2, 4});
    auto shapes = chain_shapes(c124);
    // m = 4s + 3 has representation (1, 1, s); the chain margin needs s >= 3.
    ExtensionSpec spec = make_extension(c124, 1, 4 * 3 + 3);
    FStarResult res = build_fstar(spec, shapes);
    CHECK(res.p == 4);
    CHECK(res.weights == std::vector<std::int64_t>{1, 2});
    CHECK(res.gamma == (4 - 1) + (4 - 2));
    CHECK(res.alpha == 4 * 3 + 1 + 2);

    Monomial lead(5);
    lead[3] = res.alpha;
    CHECK(res.fstar.coeff(lead) == 1);
    for (const auto& [m, c] : res.fstar.terms())
        if (!(m == lead)) CHECK(m[0] > 0);
    CHECK(vanishes_on(res.fstar, parameterize(spec)));

    ExtensionSpec small = make_extension(c124, 1, 4 * 2 + 3);
    CHECK_THROWS_AS(build_fstar(small, shapes), Error);
}

TEST_CASE("every builder output vanishes on its curve") {
    std::mt19937 rng(29);
    std::vector<std::vector<std::int64_t>> bases = {{3, 4, 6}, {2, 3}, {1, 2, 4}, {4, 6, 9}};
    for (const auto& exps : bases) {
        MonomialCurve base(exps);
        for (int trial = 0; trial < 20; ++trial) {
            std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 60);
            std::int64_t ell = 1 + static_cast<std::int64_t>(rng() % 4);
            std::optional<ExtensionSpec> maybe;
            try {
                maybe = make_extension(base, ell, m);
            } catch (const Error&) {
                continue;
            }
            const ExtensionSpec& spec = *maybe;
            Parameterization proj = parameterize(spec);
            CHECK(vanishes_on(projective_F(spec), proj));
            CHECK(vanishes_on(affine_G(spec), affine_parameterization(spec)));
            for (const auto& f : base_equations(base, xn_shapes(base)))
                CHECK(vanishes_on(f.padded(spec.nvars()), proj));
        }
    }
}
