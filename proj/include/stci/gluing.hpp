// SPDX-License-Identifier: Apache-2.0
//
// Decides whether the semigroup of a projective monomial curve splits as a
// gluing, with explicit witnesses. A curve with exponents (m_1, ..., m_{n+1})
// carries the plane semigroup generated by
//   T = {(M, 0)} u {(M - m_j, m_j) : j} u {(0, M)},   M the maximal exponent,
// and a split singles out one element T_1 against the rest.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stci/curves.hpp"

namespace stci {

enum class GlueReason {
    non_singleton_rank_two,        // |T_1| > 1: lattice intersection has rank 2
    endpoint_trivial_intersection, // T_1 is (M,0) or (0,M): intersection is {0}
    condition_one_fails,           // Delta * m_i0 is not a combination of the others
    condition_two_fails,           // every combination needs more than Delta summands
    delta_one,                     // Delta_{i0} = 1 (distinct exponents cannot glue)
};

const char* glue_reason_name(GlueReason r);

struct SemigroupSplit {
    enum class Selector { interior, endpoint_zero, endpoint_max, non_singleton };

    std::vector<std::int64_t> exponents;  // m_1 .. m_{n+1}, positive, gcd 1
    Selector selector = Selector::interior;
    std::size_t i0 = 0;  // 1-based index into exponents, used for interior
};

struct GluingDecision {
    SemigroupSplit::Selector selector = SemigroupSplit::Selector::interior;
    std::size_t i0 = 0;      // 0 unless an interior split
    bool glues = false;
    std::optional<GlueReason> reason;      // set when !glues
    std::int64_t delta = 0;                // Delta_{i0}, interior splits only
    std::vector<std::int64_t> witness;     // d_j for j != i0, ascending j
    std::int64_t slack = 0;                // Delta - sum d_j
};

/// Decides one split. For an interior singleton i0 the search runs over all
/// d_j in [0, Delta] with sum d_j <= Delta and sum d_j m_j = Delta * m_{i0};
/// the lexicographically smallest witness is reported. Failure reasons are
/// assigned in the fixed order: Delta = 1, then condition (I) (no solution
/// at all), then condition (II) (solutions exist but all are too heavy).
GluingDecision check_split(const SemigroupSplit& split);

struct GluingReport {
    std::vector<GluingDecision> splits;  // interior i0 = 1..n, endpoints, non-singleton
    bool overall = false;                // some interior split glues
};

GluingReport check_all_splits(const std::vector<std::int64_t>& exponents);

struct BadExtensionGluingResult {
    GluingDecision decision;
    SparsePoly F;

    BadExtensionGluingResult() : F(0) {}
};

/// For a bad extension (ell >= delta(m)) the split singling out the m-entry
/// always glues: the witness is the minimal representation of m itself.
/// Returns that certified decision together with the hypersurface
/// F = x_{n+1}^ell - x_0^{ell-delta} x_1^{s_1} ... x_n^{s_n} (identical to
/// projective_F of the spec). Throws errc::not_bad_extension otherwise.
BadExtensionGluingResult bad_extension_gluing(const ExtensionSpec& spec);

}  // namespace stci
