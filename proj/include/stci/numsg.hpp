// SPDX-License-Identifier: Apache-2.0
//
// Numerical semigroup arithmetic: membership, minimal representations and
// the degree delta(m), plus the leave-one-out gcd family Delta_i.
#pragma once

#include <cstdint>
#include <vector>

#include "stci/errors.hpp"

namespace stci {

/// Ordered generator list m_1 < ... < m_n of a numerical semigroup.
/// Requires n >= 2, all entries positive, strictly increasing, gcd 1.
class SemigroupGens {
public:
    explicit SemigroupGens(std::vector<std::int64_t> gens);

    const std::vector<std::int64_t>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    std::int64_t operator[](std::size_t i) const { return gens_[i]; }
    std::int64_t max() const { return gens_.back(); }

    bool operator==(const SemigroupGens&) const = default;

private:
    std::vector<std::int64_t> gens_;
};

/// One way of writing target = sum coeffs[i] * m_{i+1} with coeffs >= 0.
/// weight is the coefficient sum; when it is minimal over all such
/// writings it equals delta(target).
struct Representation {
    std::vector<std::int64_t> coeffs;
    std::int64_t target = 0;
    std::int64_t weight = 0;

    bool operator==(const Representation&) const = default;
};

/// True iff m is a non-negative integer combination of the generators.
/// Decided by a dynamic program over 0..m.
bool is_member(std::int64_t m, const SemigroupGens& gens);

/// Minimal-weight representation of m. Among representations of minimal
/// weight, the one maximizing (s_n, s_{n-1}, ..., s_1) lexicographically
/// is returned, so the result is deterministic.
/// Throws errc::not_in_semigroup if m has no representation, and
/// errc::too_large above the documented cap (m <= 10^7; the DP table is
/// O(m)).
Representation degree(std::int64_t m, const SemigroupGens& gens);

/// All representations of m whose weight equals delta(m), ordered with
/// the canonical (tie-break) representation first, descending in
/// (s_n, ..., s_1). Intended for small m; the count can grow quickly.
std::vector<Representation> all_minimal_representations(std::int64_t m,
                                                        const SemigroupGens& gens);

/// Leave-one-out gcds: entry i is the gcd of all entries except the i-th.
/// Requires at least 3 entries, all positive. When the overall gcd is 1,
/// gcd(result[i], exps[i]) == 1 for every i.
std::vector<std::int64_t> delta_gcds(const std::vector<std::int64_t>& exps);

std::int64_t gcd_all(const std::vector<std::int64_t>& values);

}  // namespace stci
