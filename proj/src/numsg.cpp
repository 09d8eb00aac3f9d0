// SPDX-License-Identifier: Apache-2.0
#include "stci/numsg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace stci {

namespace {

constexpr std::int64_t kDegreeCap = 10'000'000;  // DP table is O(m)
constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

// dp[v] = minimal coin count for value v, kUnreachable if none.
std::vector<std::int32_t> min_count_table(std::int64_t m, const SemigroupGens& gens) {
    std::vector<std::int32_t> dp(static_cast<std::size_t>(m) + 1, kUnreachable);
    dp[0] = 0;
    for (std::int64_t v = 1; v <= m; ++v) {
        std::int32_t best = kUnreachable;
        for (std::int64_t g : gens.gens()) {
            if (g > v) break;
            std::int32_t prev = dp[static_cast<std::size_t>(v - g)];
            if (prev != kUnreachable && prev + 1 < best) best = prev + 1;
        }
        dp[static_cast<std::size_t>(v)] = best;
    }
    return dp;
}

void check_degree_input(std::int64_t m) {
    if (m < 1) fail(errc::invalid_argument, "target must be positive, got " + std::to_string(m));
    if (m > kDegreeCap)
        fail(errc::too_large, "target " + std::to_string(m) + " exceeds the supported cap " +
                                  std::to_string(kDegreeCap));
}

}  // namespace

SemigroupGens::SemigroupGens(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
    if (gens_.size() < 2)
        fail(errc::invalid_argument, "need at least two generators");
    std::int64_t prev = 0;
    for (std::int64_t g : gens_) {
        if (g <= prev)
            fail(errc::invalid_argument, "generators must be positive and strictly increasing");
        prev = g;
    }
    if (gcd_all(gens_) != 1)
        fail(errc::invalid_argument, "generators must have gcd 1");
}

std::int64_t gcd_all(const std::vector<std::int64_t>& values) {
    std::int64_t g = 0;
    for (std::int64_t v : values) g = std::gcd(g, v);
    return g;
}

bool is_member(std::int64_t m, const SemigroupGens& gens) {
    check_degree_input(m);
    if (m < gens[0]) return false;
    auto dp = min_count_table(m, gens);
    return dp[static_cast<std::size_t>(m)] != kUnreachable;
}

Representation degree(std::int64_t m, const SemigroupGens& gens) {
    check_degree_input(m);
    auto dp = min_count_table(m, gens);
    if (dp[static_cast<std::size_t>(m)] == kUnreachable)
        fail(errc::not_in_semigroup, std::to_string(m) + " is not in the semigroup");

    // Reconstruct the weight-minimal representation that maximizes
    // (s_n, ..., s_1) lexicographically: strip the largest generator while
    // doing so stays on a shortest path, then move down. dp[v - g] == dp[v] - 1
    // holds iff some minimal representation of v uses g, so each greedy strip
    // is safe and the loop ends at value 0.
    Representation rep;
    rep.target = m;
    rep.coeffs.assign(gens.size(), 0);
    std::int64_t v = m;
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::int64_t g = gens[i];
        while (v >= g && dp[static_cast<std::size_t>(v - g)] ==
                             dp[static_cast<std::size_t>(v)] - 1) {
            ++rep.coeffs[i];
            v -= g;
        }
    }
    if (v != 0)
        throw std::logic_error("degree reconstruction did not terminate at zero");
    rep.weight = std::accumulate(rep.coeffs.begin(), rep.coeffs.end(), std::int64_t{0});
    return rep;
}

std::vector<Representation> all_minimal_representations(std::int64_t m,
                                                        const SemigroupGens& gens) {
    Representation canonical = degree(m, gens);  // throws if not a member
    const std::int64_t target_weight = canonical.weight;
    std::vector<Representation> out;
    std::vector<std::int64_t> coeffs(gens.size(), 0);

    // DFS from the top generator, trying larger coefficients first, so
    // results come out in descending (s_n, ..., s_1) order with the
    // canonical representation leading.
    auto walk = [&](auto&& self, std::size_t i, std::int64_t value, std::int64_t weight) -> void {
        if (i == 0) {
            if (value % gens[0] == 0 && weight + value / gens[0] == target_weight) {
                coeffs[0] = value / gens[0];
                Representation rep{coeffs, m, target_weight};
                out.push_back(std::move(rep));
            }
            return;
        }
        std::int64_t g = gens[i];
        std::int64_t max_c = std::min(value / g, target_weight - weight);
        for (std::int64_t c = max_c; c >= 0; --c) {
            coeffs[i] = c;
            self(self, i - 1, value - c * g, weight + c);
        }
        coeffs[i] = 0;
    };
    walk(walk, gens.size() - 1, m, 0);
    return out;
}

std::vector<std::int64_t> delta_gcds(const std::vector<std::int64_t>& exps) {
    if (exps.size() < 3)
        fail(errc::invalid_argument, "leave-one-out gcds need at least 3 entries");
    for (std::int64_t e : exps)
        if (e <= 0) fail(errc::invalid_argument, "entries must be positive");

    std::size_t n = exps.size();
    std::vector<std::int64_t> prefix(n + 1, 0), suffix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = std::gcd(prefix[i], exps[i]);
    for (std::size_t i = n; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], exps[i]);

    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::gcd(prefix[i], suffix[i + 1]);
    return out;
}

}  // namespace stci
