// SPDX-License-Identifier: Apache-2.0
#include "stci/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stci {

namespace {

void check_exponents(const std::vector<std::int64_t>& exps) {
    if (exps.size() < 3)
        fail(errc::invalid_argument, "need at least 3 exponents");
    for (std::int64_t e : exps)
        if (e <= 0) fail(errc::invalid_argument, "exponents must be positive");
    if (gcd_all(exps) != 1) fail(errc::invalid_argument, "exponents must have gcd 1");
}

// First witness in lexicographic order over the box [0, delta]^k with
// sum d_j <= delta and sum d_j others[j] = target, or empty.
bool find_witness(const std::vector<std::int64_t>& others, std::int64_t delta,
                  std::int64_t target, std::vector<std::int64_t>& out) {
    std::size_t k = others.size();
    out.assign(k, 0);
    auto dfs = [&](auto&& self, std::size_t pos, std::int64_t used, std::int64_t value) -> bool {
        if (value == target) {
            std::fill(out.begin() + static_cast<std::ptrdiff_t>(pos), out.end(), 0);
            return true;
        }
        if (pos == k || value > target || used == delta) return false;
        std::int64_t cap = std::min(delta - used, (target - value) / others[pos]);
        for (std::int64_t d = 0; d <= cap; ++d) {
            out[pos] = d;
            if (self(self, pos + 1, used + d, value + d * others[pos])) return true;
        }
        out[pos] = 0;
        return false;
    };
    return dfs(dfs, 0, 0, 0);
}

// Unbounded solvability of sum d_j others[j] = target over d_j >= 0.
bool condition_one_solvable(const std::vector<std::int64_t>& others, std::int64_t target) {
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= target; ++v)
        for (std::int64_t g : others)
            if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

const char* glue_reason_name(GlueReason r) {
    switch (r) {
        case GlueReason::non_singleton_rank_two: return "NonSingletonRankTwo";
        case GlueReason::endpoint_trivial_intersection: return "EndpointTrivialIntersection";
        case GlueReason::condition_one_fails: return "ConditionIFails";
        case GlueReason::condition_two_fails: return "ConditionIIFails";
        case GlueReason::delta_one: return "DeltaOne";
    }
    return "Unknown";
}

GluingDecision check_split(const SemigroupSplit& split) {
    check_exponents(split.exponents);
    GluingDecision d;
    d.selector = split.selector;

    using Sel = SemigroupSplit::Selector;
    if (split.selector == Sel::non_singleton) {
        d.reason = GlueReason::non_singleton_rank_two;
        return d;
    }
    if (split.selector == Sel::endpoint_zero || split.selector == Sel::endpoint_max) {
        d.reason = GlueReason::endpoint_trivial_intersection;
        return d;
    }

    const auto& m = split.exponents;
    if (split.i0 < 1 || split.i0 > m.size() - 1)
        fail(errc::invalid_argument, "interior split index must lie in 1..n");
    d.i0 = split.i0;

    std::vector<std::int64_t> others;
    others.reserve(m.size() - 1);
    std::int64_t delta = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j + 1 == split.i0) continue;
        others.push_back(m[j]);
        delta = std::gcd(delta, m[j]);
    }
    d.delta = delta;

    std::int64_t target = delta * m[split.i0 - 1];
    if (target > 100'000'000)
        fail(errc::too_large, "witness search target " + std::to_string(target) +
                                  " exceeds the supported desk scale");
    std::vector<std::int64_t> witness;
    if (find_witness(others, delta, target, witness)) {
        d.glues = true;
        d.witness = std::move(witness);
        d.slack = delta - std::accumulate(d.witness.begin(), d.witness.end(), std::int64_t{0});
        return d;
    }
    if (delta == 1)
        d.reason = GlueReason::delta_one;
    else if (!condition_one_solvable(others, target))
        d.reason = GlueReason::condition_one_fails;
    else
        d.reason = GlueReason::condition_two_fails;
    return d;
}

GluingReport check_all_splits(const std::vector<std::int64_t>& exponents) {
    check_exponents(exponents);
    GluingReport report;
    using Sel = SemigroupSplit::Selector;
    // Interior singletons correspond to the first n entries; the last one
    // coincides with the (0, M) endpoint.
    for (std::size_t i0 = 1; i0 <= exponents.size() - 1; ++i0) {
        SemigroupSplit split{exponents, Sel::interior, i0};
        GluingDecision d = check_split(split);
        report.overall = report.overall || d.glues;
        report.splits.push_back(std::move(d));
    }
    report.splits.push_back(check_split({exponents, Sel::endpoint_zero, 0}));
    report.splits.push_back(check_split({exponents, Sel::endpoint_max, 0}));
    report.splits.push_back(check_split({exponents, Sel::non_singleton, 0}));
    return report;
}

BadExtensionGluingResult bad_extension_gluing(const ExtensionSpec& spec) {
    if (spec.kind != ExtensionKind::bad)
        fail(errc::not_bad_extension,
             "extension is nice (delta(m) = " + std::to_string(spec.delta()) + " > ell = " +
                 std::to_string(spec.ell) + ")");

    // Split off the m-entry of (ell m_1, ..., ell m_n, m). The gcd of the
    // rest is ell, and the minimal representation of m scaled by ell gives
    // ell * m = sum s_i (ell m_i) with sum s_i = delta(m) <= ell, so both
    // gluing conditions hold with witness d = s.
    BadExtensionGluingResult out;
    out.decision.selector = SemigroupSplit::Selector::interior;
    out.decision.i0 = spec.base.n() + 1;
    out.decision.delta = spec.ell;
    out.decision.glues = true;
    out.decision.witness = spec.rep.coeffs;
    out.decision.slack = spec.ell - spec.delta();

    // Re-check (I) and (II) arithmetically rather than trusting the algebra.
    std::int64_t lhs = out.decision.delta * spec.m;
    std::int64_t rhs = 0;
    for (std::size_t i = 0; i < spec.base.n(); ++i)
        rhs += out.decision.witness[i] * spec.ell * spec.base.exponents()[i];
    if (lhs != rhs || out.decision.slack < 0)
        throw std::logic_error("bad-extension gluing witness failed its own conditions");

    out.F = projective_F(spec);
    return out;
}

}  // namespace stci
