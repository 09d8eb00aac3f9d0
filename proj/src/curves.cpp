// SPDX-License-Identifier: Apache-2.0
#include "stci/curves.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stci {

namespace {

// Product of x_1^{s_1} ... x_n^{s_n} as a monomial over nvars variables.
Monomial rep_monomial(const Representation& rep, std::size_t nvars) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < rep.coeffs.size(); ++i) m[i + 1] = rep.coeffs[i];
    return m;
}

SparsePoly substituted(const SparsePoly& p, const Parameterization& param) {
    return substitute_monomials(p, param.images);
}

}  // namespace

std::vector<std::int64_t> ExtensionSpec::extension_exponents() const {
    std::vector<std::int64_t> out;
    out.reserve(base.n() + 1);
    for (std::int64_t e : base.exponents()) out.push_back(ell * e);
    out.push_back(m);
    return out;
}

ExtensionSpec make_extension(const MonomialCurve& base, std::int64_t ell, std::int64_t m) {
    if (ell < 1) fail(errc::invalid_argument, "ell must be positive");
    if (m < 1) fail(errc::invalid_argument, "m must be positive");
    if (std::gcd(ell, m) != 1)
        fail(errc::not_coprime, "gcd(ell, m) = " + std::to_string(std::gcd(ell, m)) +
                                    ", extension needs coprime ell and m");
    Representation rep = degree(m, base.gens());
    ExtensionKind kind = rep.weight > ell ? ExtensionKind::nice : ExtensionKind::bad;
    return ExtensionSpec{base, ell, m, std::move(rep), kind};
}

SparsePoly affine_G(const ExtensionSpec& spec) {
    std::size_t nv = spec.nvars();
    SparsePoly g = SparsePoly::monomial(rep_monomial(spec.rep, nv));
    g -= SparsePoly::variable(nv, nv - 1, spec.ell);
    return g;
}

SparsePoly projective_F(const ExtensionSpec& spec) {
    std::size_t nv = spec.nvars();
    Monomial lead = rep_monomial(spec.rep, nv);
    if (spec.kind == ExtensionKind::nice) {
        Monomial trail(nv);
        trail[0] = spec.delta() - spec.ell;
        trail[nv - 1] = spec.ell;
        SparsePoly f = SparsePoly::monomial(lead);
        f -= SparsePoly::monomial(trail);
        return f;
    }
    Monomial first(nv);
    first[nv - 1] = spec.ell;
    Monomial second = lead;
    second[0] = spec.ell - spec.delta();
    SparsePoly f = SparsePoly::monomial(first);
    f -= SparsePoly::monomial(second);
    return f;
}

Parameterization parameterize(const std::vector<std::int64_t>& exponents) {
    if (exponents.empty()) fail(errc::invalid_argument, "need at least one exponent");
    std::int64_t M = *std::max_element(exponents.begin(), exponents.end());
    Parameterization param;
    param.hom_degree = M;
    param.images.reserve(exponents.size() + 1);
    param.images.push_back(Monomial({M, 0}));  // x_0 -> u^M
    for (std::int64_t a : exponents) param.images.push_back(Monomial({M - a, a}));
    return param;
}

Parameterization parameterize(const MonomialCurve& curve) {
    return parameterize(curve.exponents());
}

Parameterization parameterize(const ExtensionSpec& spec) {
    return parameterize(spec.extension_exponents());
}

Parameterization affine_parameterization(const ExtensionSpec& spec) {
    Parameterization param;
    param.hom_degree = 0;
    param.images.push_back(Monomial({0, 0}));  // x_0 -> 1
    for (std::int64_t a : spec.extension_exponents()) param.images.push_back(Monomial({0, a}));
    return param;
}

SparsePoly shape_equation(const BinomialShape& shape, std::size_t base_n, std::size_t nvars) {
    RewriteRule rule = shape_rule(shape, base_n, nvars);
    SparsePoly f = SparsePoly::variable(nvars, shape.var_index, shape.a);
    f -= SparsePoly::monomial(rule.replacement);
    return f;
}

RewriteRule shape_rule(const BinomialShape& shape, std::size_t base_n, std::size_t nvars) {
    if (shape.var_index < 1 || shape.var_index >= base_n)
        fail(errc::invalid_argument, "shape index must lie strictly between 0 and n");
    std::size_t target = shape.form == ShapeForm::to_last ? base_n : shape.var_index + 1;
    if (target >= nvars) fail(errc::invalid_argument, "shape target outside the variable list");
    Monomial repl(nvars);
    repl[0] = shape.a - shape.b;
    repl[target] = shape.b;
    return RewriteRule(shape.var_index, shape.a, std::move(repl));
}

std::vector<BinomialShape> xn_shapes(const MonomialCurve& curve) {
    const auto& m = curve.exponents();
    std::vector<BinomialShape> shapes;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        std::int64_t g = std::gcd(m[i], m.back());
        shapes.push_back({i + 1, m.back() / g, m[i] / g, ShapeForm::to_last});
    }
    return shapes;
}

std::vector<BinomialShape> chain_shapes(const MonomialCurve& curve) {
    const auto& m = curve.exponents();
    std::vector<BinomialShape> shapes;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        std::int64_t g = std::gcd(m[i], m[i + 1]);
        shapes.push_back({i + 1, m[i + 1] / g, m[i] / g, ShapeForm::chain});
    }
    return shapes;
}

std::vector<SparsePoly> base_equations(const MonomialCurve& curve,
                                       const std::vector<BinomialShape>& shapes) {
    std::vector<SparsePoly> out;
    out.reserve(shapes.size());
    for (const BinomialShape& s : shapes)
        out.push_back(shape_equation(s, curve.n(), curve.n() + 1));
    return out;
}

std::vector<SparsePoly> rational_normal_equations(std::size_t n) {
    if (n < 2) fail(errc::invalid_argument, "rational normal curve needs n >= 2");
    std::vector<std::int64_t> exps(n);
    std::iota(exps.begin(), exps.end(), 1);
    MonomialCurve curve{std::move(exps)};
    return base_equations(curve, xn_shapes(curve));
}

SparsePoly plane_curve_equation(std::int64_t m1, std::int64_t m2) {
    SemigroupGens gens({m1, m2});  // validates order, positivity, gcd
    SparsePoly f = SparsePoly::variable(3, 1, m2);
    Monomial trail(3);
    trail[0] = m2 - m1;
    trail[2] = m1;
    f -= SparsePoly::monomial(trail);
    return f;
}

std::vector<SparsePoly> custom_base_equations(const MonomialCurve& curve,
                                              std::vector<SparsePoly> equations) {
    Parameterization param = parameterize(curve);
    for (const SparsePoly& eq : equations) {
        if (eq.nvars() != curve.n() + 1)
            fail(errc::var_count_mismatch, "base equations live in x0..xn");
        if (!substituted(eq, param).is_zero())
            fail(errc::does_not_vanish,
                 "equation does not vanish on the base curve: " + eq.str());
    }
    return equations;
}

namespace {

struct FStarPlan {
    std::int64_t p = 1;
    std::vector<std::int64_t> weights;  // carrier weight of x_i^p, by shape
    std::int64_t gamma = 0;
    std::int64_t alpha = 0;
    std::int64_t margin = 0;  // delta - ell - sum (p - w_i - 1) s_i
};

FStarPlan plan_fstar(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes) {
    const std::size_t n = spec.base.n();
    const auto& mexp = spec.base.exponents();
    const auto& s = spec.rep.coeffs;

    std::vector<const BinomialShape*> by_index(n, nullptr);
    bool any_chain = false, any_last = false;
    for (const BinomialShape& sh : shapes) {
        if (sh.var_index < 1 || sh.var_index >= n)
            fail(errc::shape_mismatch, "shape index x" + std::to_string(sh.var_index) +
                                           " outside 1..n-1");
        if (by_index[sh.var_index])
            fail(errc::shape_mismatch, "duplicate shape for x" + std::to_string(sh.var_index));
        by_index[sh.var_index] = &sh;
        if (sh.a <= sh.b || sh.b <= 0)
            fail(errc::shape_mismatch, "shape exponents need a > b > 0");
        // Weight identity a*m_i = b*m_target makes the shape vanish on the
        // curve; anything else cannot certify the extension.
        std::size_t target = sh.form == ShapeForm::to_last ? n : sh.var_index + 1;
        if (sh.a * mexp[sh.var_index - 1] != sh.b * mexp[target - 1])
            fail(errc::shape_mismatch, "shape does not vanish on the base curve");
        (sh.form == ShapeForm::chain ? any_chain : any_last) = true;
    }
    // n = 2 makes the two forms coincide; otherwise they must not be mixed.
    if (any_chain && any_last && n > 2)
        fail(errc::shape_mismatch, "mixed shape forms are not supported");
    bool chain = any_chain && n > 2;
    if (chain) {
        for (std::size_t i = 1; i < n; ++i)
            if (!by_index[i])
                fail(errc::shape_mismatch, "chain form needs one shape per x1..x_{n-1}");
    } else {
        for (std::size_t i = 1; i < n; ++i)
            if (!by_index[i] && s[i - 1] > 0)
                fail(errc::shape_mismatch,
                     "no shape rewrites x" + std::to_string(i) + " but s_" + std::to_string(i) +
                         " > 0");
    }

    FStarPlan plan;
    for (const BinomialShape& sh : shapes) plan.p *= sh.a;
    if (plan.p > 1'000'000) fail(errc::too_large, "shape threshold product too large");

    plan.weights.assign(shapes.size(), 0);
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        const BinomialShape& sh = shapes[k];
        if (chain) {
            // x_i^p cascades down the chain to the carrier x_n, keeping
            // weight prod_{j<i} a_j * prod_{j>=i} b_j of it.
            std::int64_t w = 1;
            for (std::size_t j = 1; j < n; ++j)
                w *= (j < sh.var_index) ? by_index[j]->a : by_index[j]->b;
            plan.weights[k] = w;
        } else {
            plan.weights[k] = plan.p / sh.a * sh.b;
        }
    }

    std::int64_t cost = 0;  // sum (p - w_i - 1) s_i
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        std::int64_t si = s[shapes[k].var_index - 1];
        plan.gamma += (plan.p - plan.weights[k]) * si;
        plan.alpha += plan.weights[k] * si;
        cost += (plan.p - plan.weights[k] - 1) * si;
    }
    plan.alpha += plan.p * s[n - 1];
    plan.margin = spec.delta() - spec.ell - cost;
    return plan;
}

}  // namespace

bool fstar_condition_holds(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes) {
    if (spec.kind != ExtensionKind::nice) return false;
    return plan_fstar(spec, shapes).margin > 0;
}

FStarResult build_fstar(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes) {
    if (spec.kind != ExtensionKind::nice)
        fail(errc::invalid_argument, "F* is defined for nice extensions only");
    FStarPlan plan = plan_fstar(spec, shapes);
    if (plan.margin <= 0)
        fail(errc::condition_fails,
             "largeness condition fails: delta(m) - ell - sum (p - w_i - 1) s_i = " +
                 std::to_string(plan.margin) + " <= 0, F* need not be a polynomial");

    const std::size_t nv = spec.nvars();
    std::vector<RewriteRule> rules;
    rules.reserve(shapes.size());
    for (const BinomialShape& sh : shapes) rules.push_back(shape_rule(sh, spec.base.n(), nv));

    FStarResult result;
    result.F = projective_F(spec);
    result.p = plan.p;
    result.weights = plan.weights;
    result.gamma = plan.gamma;
    result.alpha = plan.alpha;

    SparsePoly reduced = reduce(result.F.pow(plan.p), rules);

    std::int64_t min_x0 = -1;
    for (const auto& [mono, c] : reduced.terms())
        if (min_x0 < 0 || mono[0] < min_x0) min_x0 = mono[0];
    if (min_x0 != plan.gamma)
        fail(errc::condition_fails,
             "reduced F^p is divisible by x0^" + std::to_string(min_x0) + ", expected exactly x0^" +
                 std::to_string(plan.gamma));

    SparsePoly fstar(nv);
    for (const auto& [mono, c] : reduced.terms()) {
        Monomial mm = mono;
        mm[0] -= plan.gamma;
        fstar.add_term(mm, c);
    }

    Monomial lead(nv);
    lead[nv - 2] = plan.alpha;
    if (fstar.coeff(lead) != 1)
        fail(errc::condition_fails, "F* lacks the pure x_n^alpha term with coefficient 1");
    for (const auto& [mono, c] : fstar.terms())
        if (!(mono == lead) && mono[0] == 0)
            fail(errc::condition_fails,
                 "F* has a term beyond x_n^alpha not divisible by x0; the construction "
                 "cannot remove the line at infinity");

    result.fstar = std::move(fstar);
    return result;
}

}  // namespace stci
