// SPDX-License-Identifier: Apache-2.0
//
// Monomial curves, their extensions, and the hypersurface equation
// builders: the affine relation G, its projective form F, and the lifted
// power F* that removes the residual line at infinity.
#pragma once

#include <cstdint>
#include <vector>

#include "stci/mpoly.hpp"
#include "stci/numsg.hpp"

namespace stci {

/// Projective monomial curve with exponents m_1 < ... < m_n and homogeneous
/// coordinates x_0, ..., x_n. Its generic point is
/// (u^M, u^{M-m_1} v^{m_1}, ..., v^M) with M = m_n.
class MonomialCurve {
public:
    explicit MonomialCurve(SemigroupGens gens) : gens_(std::move(gens)) {}
    explicit MonomialCurve(std::vector<std::int64_t> exponents)
        : gens_(std::move(exponents)) {}

    const SemigroupGens& gens() const noexcept { return gens_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return gens_.gens(); }
    std::size_t n() const noexcept { return gens_.size(); }

    bool operator==(const MonomialCurve&) const = default;

private:
    SemigroupGens gens_;
};

enum class ExtensionKind { nice, bad };

/// The curve with exponent list (ell*m_1, ..., ell*m_n, m), living one
/// dimension up from its base. nice when delta(m) > ell, bad otherwise.
/// The exponent order is preserved exactly; m is always the last entry even
/// when it is not maximal.
struct ExtensionSpec {
    MonomialCurve base;
    std::int64_t ell = 1;
    std::int64_t m = 0;
    Representation rep;  // canonical minimal-weight representation of m
    ExtensionKind kind = ExtensionKind::nice;

    std::int64_t delta() const noexcept { return rep.weight; }
    std::vector<std::int64_t> extension_exponents() const;
    /// Ambient variables x_0 .. x_{n+1}.
    std::size_t nvars() const noexcept { return base.n() + 2; }
};

/// Validates gcd(ell, m) == 1 (errc::not_coprime) and membership of m in
/// the base semigroup (errc::not_in_semigroup), then classifies.
ExtensionSpec make_extension(const MonomialCurve& base, std::int64_t ell, std::int64_t m);

/// G = x_1^{s_1} ... x_n^{s_n} - x_{n+1}^ell over x_0..x_{n+1} (x_0 unused).
/// Generates the extension ideal over the base ideal.
SparsePoly affine_G(const ExtensionSpec& spec);

/// Homogeneous binomial cutting the projective extension together with the
/// base hypersurfaces:
///   nice: x_1^{s_1}...x_n^{s_n} - x_0^{delta-ell} x_{n+1}^ell
///   bad:  x_{n+1}^ell - x_0^{ell-delta} x_1^{s_1}...x_n^{s_n}
/// Either equals homogenize(affine_G) up to sign.
SparsePoly projective_F(const ExtensionSpec& spec);

/// Generic point of a projective monomial curve: one bivariate monomial in
/// (u, v) per coordinate. Coordinate for exponent a is u^{M-a} v^a with
/// M the maximal exponent; x_0 maps to u^M.
struct Parameterization {
    std::vector<Monomial> images;  // over (u, v); images[0] belongs to x_0
    std::int64_t hom_degree = 0;   // M
};

Parameterization parameterize(const std::vector<std::int64_t>& exponents);
Parameterization parameterize(const MonomialCurve& curve);
Parameterization parameterize(const ExtensionSpec& spec);

/// Affine chart u = 1: x_0 -> 1 and exponent a -> v^a. The affine relation
/// G vanishes under this substitution.
Parameterization affine_parameterization(const ExtensionSpec& spec);

/// Binomial hypersurface shape x_i^a - x0^{a-b} x_t^b where the carrier
/// variable x_t is either the top curve variable x_n (to_last) or the next
/// one x_{i+1} (chain).
enum class ShapeForm { to_last, chain };

struct BinomialShape {
    std::size_t var_index = 0;  // i in 1..n-1
    std::int64_t a = 0;
    std::int64_t b = 0;
    ShapeForm form = ShapeForm::to_last;
};

/// The equation x_i^a - x0^{a-b} x_t^b embedded in nvars variables, where
/// the curve has n = base_n coordinates x_1..x_n.
SparsePoly shape_equation(const BinomialShape& shape, std::size_t base_n, std::size_t nvars);
RewriteRule shape_rule(const BinomialShape& shape, std::size_t base_n, std::size_t nvars);

/// Smallest to_last shapes vanishing on the curve: a_i m_i = b_i m_n with
/// a_i = m_n/g, b_i = m_i/g, g = gcd(m_i, m_n). One shape per i = 1..n-1.
std::vector<BinomialShape> xn_shapes(const MonomialCurve& curve);

/// Smallest chain shapes: a_i m_i = b_i m_{i+1} with g = gcd(m_i, m_{i+1}).
std::vector<BinomialShape> chain_shapes(const MonomialCurve& curve);

/// Materializes shapes as polynomials over the base ambient x_0..x_n.
std::vector<SparsePoly> base_equations(const MonomialCurve& curve,
                                       const std::vector<BinomialShape>& shapes);

/// Hypersurfaces for the rational normal curve (1, 2, ..., n).
std::vector<SparsePoly> rational_normal_equations(std::size_t n);

/// x_1^{m_2} - x_0^{m_2-m_1} x_2^{m_1} for the plane curve (m_1, m_2).
SparsePoly plane_curve_equation(std::int64_t m1, std::int64_t m2);

/// Accepts user-supplied base hypersurfaces after checking each vanishes on
/// the curve (errc::does_not_vanish otherwise). That they cut the curve
/// set-theoretically remains the caller's assertion.
std::vector<SparsePoly> custom_base_equations(const MonomialCurve& curve,
                                              std::vector<SparsePoly> equations);

struct FStarResult {
    SparsePoly F;                        // projective binomial of the extension
    std::int64_t p = 1;                  // product of the shape thresholds
    std::vector<std::int64_t> weights;   // carrier weight of x_i^p per shape
    std::int64_t gamma = 0;              // exact power of x_0 dividing reduce(F^p)
    std::int64_t alpha = 0;              // exponent of the pure x_n term of F*
    SparsePoly fstar;

    FStarResult() : F(0), fstar(0) {}
};

/// Builds F* for a nice extension: reduces F^p by the shape rules, divides
/// by x_0^gamma exactly, and verifies the result is x_n^alpha plus terms
/// all divisible by x_0. Requires the largeness condition
///   delta(m) > ell + sum (p - w_i - 1) s_i
/// (w_i the carrier weights); otherwise errc::condition_fails. Shapes must
/// cover every i < n with s_i > 0 and be of one form (errc::shape_mismatch).
FStarResult build_fstar(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes);

/// The largeness test on its own, for callers that want to pre-screen.
bool fstar_condition_holds(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes);

}  // namespace stci
