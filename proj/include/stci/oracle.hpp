// SPDX-License-Identifier: Apache-2.0
//
// Independent verification: symbolic vanishing certificates, toric binomial
// enumeration, exhaustive zero-set comparison over small prime fields, and
// the from-scratch recheck of the F^p = x0^gamma F* identity.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stci/curves.hpp"

namespace stci {

/// True iff p becomes the zero polynomial under the parameterization: an
/// exact symbolic certificate that the curve lies inside Z(p), valid over
/// every field.
bool vanishes_on(const SparsePoly& p, const Parameterization& param);

/// All binomials x^A - x^B with deg <= degree_bound whose two monomials
/// carry the same (u, v)-weight under the curve grading. Every output
/// vanishes on the curve by construction. Deterministic order; bound
/// capped at 12 (errc::bound_too_large).
std::vector<SparsePoly> toric_binomials(const std::vector<std::int64_t>& exponents,
                                        std::int64_t degree_bound);

struct FiniteFieldConfig {
    int q = 5;               // field size, small prime in [3, 101]
    bool caveat_ack = true;  // finite-field runs are recorded as evidence, not proof
};

struct ZeroSetReport {
    int q = 0;
    std::string label;  // always flags the char-p caveat
    bool line_mode = false;
    std::size_t line_prefix = 0;       // leading coordinates pinned to 0 on the line
    std::size_t hypersurface_points = 0;
    std::size_t curve_points = 0;
    std::vector<std::vector<int>> extras;   // common zeros beyond the expected set
    std::vector<std::vector<int>> missing;  // expected points failing an equation
};

/// Enumerates all of P^k(F_q) (points normalized to first nonzero
/// coordinate 1), intersects the given hypersurfaces, and compares with the
/// parameterized curve points over P^1(F_q). With line_prefix > 0 the
/// expected set is the curve together with the coordinate line whose first
/// line_prefix coordinates vanish. Throws errc::too_large when the
/// enumeration would exceed 10^7 points and errc::invalid_argument for a
/// non-prime or out-of-range q.
ZeroSetReport zero_set_compare(const std::vector<SparsePoly>& equations,
                               const Parameterization& curve,
                               const FiniteFieldConfig& cfg,
                               std::size_t line_prefix = 0);

/// Recomputes reduce(F^p) from scratch and compares it term-for-term with
/// x0^gamma * F*.
bool check_eq1(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes,
               const FStarResult& result);

/// {5, 7, 11} minus any q dividing a nonzero pairwise difference of the
/// exponents (those collapse parameterized coordinates).
std::vector<int> default_field_sizes(const std::vector<std::int64_t>& exponents);

bool is_small_prime(int q);

}  // namespace stci
