// SPDX-License-Identifier: Apache-2.0
#include "stci/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace stci {

namespace {

constexpr std::size_t kMaxEnumeration = 10'000'000;

int mod_pow(std::int64_t base, std::int64_t exp, int q) {
    std::int64_t b = ((base % q) + q) % q;
    std::int64_t acc = 1;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % q;
        b = b * b % q;
        exp >>= 1;
    }
    return static_cast<int>(acc);
}

int coeff_mod(const Coeff& c, int q) {
    Coeff r = c % q;
    if (r < 0) r += q;
    return static_cast<int>(r);
}

int eval_mod(const SparsePoly& p, const std::vector<int>& point, int q) {
    std::int64_t total = 0;
    for (const auto& [mono, c] : p.terms()) {
        std::int64_t term = coeff_mod(c, q);
        for (std::size_t v = 0; v < point.size() && term != 0; ++v)
            if (mono[v] != 0) term = term * mod_pow(point[v], mono[v], q) % q;
        total = (total + term) % q;
    }
    return static_cast<int>(total);
}

// Normalized representatives of P^k(F_q): first nonzero coordinate is 1.
template <typename Visit>
void each_projective_point(std::size_t coords, int q, Visit&& visit) {
    std::vector<int> point(coords, 0);
    for (std::size_t lead = 0; lead < coords; ++lead) {
        std::fill(point.begin(), point.end(), 0);
        point[lead] = 1;
        std::size_t free_coords = coords - lead - 1;
        std::vector<int> tail(free_coords, 0);
        while (true) {
            for (std::size_t i = 0; i < free_coords; ++i) point[lead + 1 + i] = tail[i];
            visit(point);
            std::size_t i = 0;
            for (; i < free_coords; ++i) {
                if (++tail[i] < q) break;
                tail[i] = 0;
            }
            if (i == free_coords) break;
        }
    }
}

std::int64_t projective_point_count(std::size_t coords, int q) {
    std::int64_t total = 0, power = 1;
    for (std::size_t i = 0; i < coords; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::vector<int> normalized(std::vector<int> point, int q) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i] == 0) continue;
        int inv = mod_pow(point[i], q - 2, q);
        for (std::size_t j = 0; j < point.size(); ++j)
            point[j] = static_cast<int>(static_cast<std::int64_t>(point[j]) * inv % q);
        break;
    }
    return point;
}

}  // namespace

bool vanishes_on(const SparsePoly& p, const Parameterization& param) {
    return substitute_monomials(p, param.images).is_zero();
}

std::vector<SparsePoly> toric_binomials(const std::vector<std::int64_t>& exponents,
                                        std::int64_t degree_bound) {
    if (degree_bound < 0) fail(errc::invalid_argument, "degree bound must be non-negative");
    if (degree_bound > 12)
        fail(errc::bound_too_large, "degree bound " + std::to_string(degree_bound) +
                                        " exceeds the supported cap 12");
    Parameterization param = parameterize(exponents);
    std::size_t nvars = param.images.size();

    // Bucket all monomials of degree 1..bound by their (u, v)-weight; any
    // two monomials in one bucket differ by a relation of the curve.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Monomial>> buckets;
    Monomial scratch(nvars);
    auto enumerate = [&](auto&& self, std::size_t var, std::int64_t remaining) -> void {
        if (var + 1 == nvars) {
            scratch[var] = remaining;
            std::int64_t wu = 0, wv = 0;
            for (std::size_t i = 0; i < nvars; ++i) {
                wu += scratch[i] * param.images[i][0];
                wv += scratch[i] * param.images[i][1];
            }
            buckets[{wu, wv}].push_back(scratch);
            return;
        }
        for (std::int64_t e = 0; e <= remaining; ++e) {
            scratch[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    for (std::int64_t d = 1; d <= degree_bound; ++d) enumerate(enumerate, 0, d);

    std::vector<SparsePoly> out;
    for (auto& [weight, monos] : buckets) {
        if (monos.size() < 2) continue;
        std::sort(monos.begin(), monos.end(), TermOrder{});
        for (std::size_t i = 0; i < monos.size(); ++i)
            for (std::size_t j = i + 1; j < monos.size(); ++j) {
                SparsePoly b = SparsePoly::monomial(monos[i]);
                b -= SparsePoly::monomial(monos[j]);
                out.push_back(std::move(b));
            }
    }
    auto leading_order = [](const SparsePoly& a, const SparsePoly& b) {
        TermOrder lt;
        auto ai = a.terms().begin(), bi = b.terms().begin();
        for (; ai != a.terms().end() && bi != b.terms().end(); ++ai, ++bi) {
            if (lt(ai->first, bi->first)) return true;
            if (lt(bi->first, ai->first)) return false;
        }
        return a.term_count() < b.term_count();
    };
    std::sort(out.begin(), out.end(), leading_order);
    return out;
}

ZeroSetReport zero_set_compare(const std::vector<SparsePoly>& equations,
                               const Parameterization& curve,
                               const FiniteFieldConfig& cfg,
                               std::size_t line_prefix) {
    if (!is_small_prime(cfg.q))
        fail(errc::invalid_argument, "field size must be a prime in [3, 101]");
    std::size_t coords = curve.images.size();
    if (coords > 6) fail(errc::too_large, "ambient projective dimension above 5");
    if (projective_point_count(coords, cfg.q) > static_cast<std::int64_t>(kMaxEnumeration))
        fail(errc::too_large, "projective point enumeration would exceed 10^7 points");
    for (const SparsePoly& eq : equations)
        if (eq.nvars() != coords)
            fail(errc::var_count_mismatch, "equation and parameterization variable counts differ");

    const int q = cfg.q;
    ZeroSetReport report;
    report.q = q;
    report.label = "EVIDENCE (char p): finite-field enumeration, not a characteristic-zero proof";
    report.line_mode = line_prefix > 0;
    report.line_prefix = line_prefix;

    std::set<std::vector<int>> hyper;
    each_projective_point(coords, q, [&](const std::vector<int>& point) {
        for (const SparsePoly& eq : equations)
            if (eval_mod(eq, point, q) != 0) return;
        hyper.insert(point);
    });
    report.hypersurface_points = hyper.size();

    // Curve points: images of (u, v) = (1, t) for t in F_q plus (0, 1).
    std::set<std::vector<int>> expected;
    auto image_of = [&](int u, int v) {
        std::vector<int> point(coords);
        for (std::size_t i = 0; i < coords; ++i) {
            std::int64_t eu = curve.images[i][0], ev = curve.images[i][1];
            int value = 1;
            if (eu > 0) value = u == 0 ? 0 : mod_pow(u, eu, q);
            if (value != 0 && ev > 0)
                value = v == 0 ? 0 : static_cast<int>(
                                         static_cast<std::int64_t>(value) * mod_pow(v, ev, q) % q);
            point[i] = value;
        }
        return normalized(std::move(point), q);
    };
    for (int t = 0; t < q; ++t) expected.insert(image_of(1, t));
    expected.insert(image_of(0, 1));
    report.curve_points = expected.size();

    if (line_prefix > 0) {
        each_projective_point(coords, q, [&](const std::vector<int>& point) {
            for (std::size_t i = 0; i < line_prefix; ++i)
                if (point[i] != 0) return;
            expected.insert(point);
        });
    }

    std::set_difference(hyper.begin(), hyper.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.extras));
    std::set_difference(expected.begin(), expected.end(), hyper.begin(), hyper.end(),
                        std::back_inserter(report.missing));
    return report;
}

bool check_eq1(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes,
               const FStarResult& result) {
    std::vector<RewriteRule> rules;
    rules.reserve(shapes.size());
    for (const BinomialShape& sh : shapes)
        rules.push_back(shape_rule(sh, spec.base.n(), spec.nvars()));
    SparsePoly lhs = reduce(projective_F(spec).pow(result.p), rules);
    SparsePoly rhs = SparsePoly::variable(spec.nvars(), 0, result.gamma) * result.fstar;
    return lhs == rhs;
}

std::vector<int> default_field_sizes(const std::vector<std::int64_t>& exponents) {
    std::vector<int> out;
    for (int q : {5, 7, 11}) {
        bool collapses = false;
        for (std::size_t i = 0; i < exponents.size() && !collapses; ++i)
            for (std::size_t j = i + 1; j < exponents.size() && !collapses; ++j) {
                std::int64_t diff = exponents[j] - exponents[i];
                if (diff != 0 && diff % q == 0) collapses = true;
            }
        if (!collapses) out.push_back(q);
    }
    return out;
}

bool is_small_prime(int q) {
    if (q < 3 || q > 101) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace stci
