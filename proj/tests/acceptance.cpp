// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Every tolerance and time limit is pinned here.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stci/curves.hpp"
#include "stci/gluing.hpp"
#include "stci/numsg.hpp"
#include "stci/oracle.hpp"

using namespace stci;

namespace {

struct Check {
    bool pass = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            note = what;
        }
    }
};

double run_criterion(int id, const std::string& title, double limit_ms,
                     const std::function<void(Check&)>& body, bool& all_pass) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    check.require(ms < limit_ms, "time limit exceeded: " + std::to_string(ms) + " ms > " +
                                     std::to_string(limit_ms) + " ms");
    std::cout << (check.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ("
              << ms << " ms)";
    if (!check.pass) std::cout << " -- " << check.note;
    std::cout << "\n";
    all_pass = all_pass && check.pass;
    return ms;
}

const char* kGoldenFStarS3 =
    "x3^25 - 6*x0^2*x1*x2^2*x3^19*x4 + 15*x0^6*x2*x3^16*x4^2 - 20*x0^9*x1*x3^12*x4^3 + "
    "15*x0^12*x2^2*x3^7*x4^4 - 6*x0^15*x1*x2*x3^3*x4^5 + x0^19*x4^6";

// The stricter inequality s_n > ell + sum (p - w_i - 1) s_i, evaluated on
// the canonical representation. It implies the builder's own gate.
bool strong_condition(const ExtensionSpec& spec, const std::vector<BinomialShape>& shapes) {
    std::int64_t p = 1;
    for (const auto& sh : shapes) p *= sh.a;
    std::int64_t cost = 0;
    for (const auto& sh : shapes) {
        std::int64_t w;
        if (sh.form == ShapeForm::chain && spec.base.n() > 2) {
            w = 1;
            for (const auto& other : shapes)
                w *= (other.var_index < sh.var_index) ? other.a : other.b;
        } else {
            w = p / sh.a * sh.b;
        }
        cost += (p - w - 1) * spec.rep.coeffs[sh.var_index - 1];
    }
    return spec.rep.coeffs[spec.base.n() - 1] > spec.ell + cost;
}

struct ShapedBase {
    std::vector<std::int64_t> exponents;
    bool chain = false;
};

const std::vector<ShapedBase>& shaped_bases() {
    static const std::vector<ShapedBase> pool = {
        {{3, 4, 6}, false}, {{2, 3}, false},    {{2, 5}, false},  {{3, 5}, false},
        {{1, 2, 4}, true},  {{1, 2, 4}, false}, {{1, 2, 3}, true}, {{4, 6, 9}, false},
        {{1, 3, 9}, true},  {{2, 4, 5}, false}};
    return pool;
}

}  // namespace

int main() {
    bool all_pass = true;

    run_criterion(
        1, "degree reproduction for the (3,4,6) family", 1000.0,
        [](Check& c) {
            SemigroupGens gens({3, 4, 6});
            for (std::int64_t s = 1; s <= 20; ++s) {
                Representation rep = degree(6 * s + 7, gens);
                c.require(rep.weight == s + 2,
                          "delta(6*" + std::to_string(s) + "+7) != s+2");
                c.require(rep.coeffs == std::vector<std::int64_t>{1, 1, s},
                          "representation at s=" + std::to_string(s) + " is not (1,1,s)");
            }
        },
        all_pass);

    run_criterion(
        2, "gluing verdicts on the two reference curves", 1000.0,
        [](Check& c) {
            GluingReport yes = check_all_splits({2, 3, 4, 8});
            c.require(yes.overall, "(2,3,4,8) must glue");
            const GluingDecision& d = yes.splits[1];  // i0 = 2
            c.require(d.glues && d.i0 == 2, "gluing split must be i0=2");
            c.require(d.witness == std::vector<std::int64_t>{1, 1, 0}, "witness must be (1,1,0)");
            std::int64_t value = d.witness[0] * 2 + d.witness[1] * 4 + d.witness[2] * 8;
            c.require(value == d.delta * 3, "condition (I) recheck");
            c.require(d.witness[0] + d.witness[1] + d.witness[2] <= d.delta,
                      "condition (II) recheck");

            GluingReport no = check_all_splits({2, 4, 7, 8});
            c.require(!no.overall, "(2,4,7,8) must not glue");
            for (const auto& split : no.splits)
                c.require(!split.glues, "every split of (2,4,7,8) must fail");
        },
        all_pass);

    run_criterion(
        3, "seven-term F* golden value and the s=2 gate", 1000.0,
        [](Check& c) {
            MonomialCurve base({3, 4, 6});
            auto shapes = xn_shapes(base);
            FStarResult res = build_fstar(make_extension(base, 1, 25), shapes);
            SparsePoly golden = SparsePoly::parse(kGoldenFStarS3, 5);
            c.require(res.fstar == golden, "F* differs from the seven-term golden value");
            c.require(res.fstar.term_count() == 7, "F* must have exactly 7 terms");

            bool gated = false;
            try {
                build_fstar(make_extension(base, 1, 19), shapes);  // s = 2
            } catch (const Error& e) {
                gated = e.code() == errc::condition_fails;
            }
            c.require(gated, "s=2 must raise ConditionFails");
        },
        all_pass);

    run_criterion(
        4, "power identity on the family and 25 random instances", 30000.0,
        [](Check& c) {
            MonomialCurve base346({3, 4, 6});
            auto shapes346 = xn_shapes(base346);
            for (std::int64_t s = 3; s <= 8; ++s) {
                ExtensionSpec spec = make_extension(base346, 1, 6 * s + 7);
                FStarResult res = build_fstar(spec, shapes346);
                c.require(check_eq1(spec, shapes346, res),
                          "identity fails at s=" + std::to_string(s));
            }

            std::mt19937 rng(20240809);
            int built = 0, attempts = 0;
            while (built < 25 && attempts < 20000) {
                ++attempts;
                const ShapedBase& entry = shaped_bases()[rng() % shaped_bases().size()];
                MonomialCurve base(entry.exponents);
                auto shapes = entry.chain ? chain_shapes(base) : xn_shapes(base);
                std::int64_t ell = 1 + static_cast<std::int64_t>(rng() % 3);
                std::int64_t sn = 2 + static_cast<std::int64_t>(rng() % 40);
                std::int64_t m = sn * base.exponents().back();
                for (std::size_t i = 0; i + 1 < base.n(); ++i)
                    m += static_cast<std::int64_t>(rng() % 3) * base.exponents()[i];
                if (std::gcd(ell, m) != 1) continue;
                ExtensionSpec spec = make_extension(base, ell, m);
                if (spec.kind != ExtensionKind::nice) continue;
                if (!strong_condition(spec, shapes)) continue;
                FStarResult res = build_fstar(spec, shapes);
                c.require(check_eq1(spec, shapes, res),
                          "identity fails on random instance #" + std::to_string(built));
                ++built;
            }
            c.require(built == 25, "only built " + std::to_string(built) + " valid instances");
        },
        all_pass);

    run_criterion(
        5, "universal vanishing across 200 random builder instances", 60000.0,
        [](Check& c) {
            std::mt19937 rng(20240810);
            int instances = 0, attempts = 0, polys = 0;
            while (instances < 200 && attempts < 40000) {
                ++attempts;
                const ShapedBase& entry = shaped_bases()[rng() % shaped_bases().size()];
                MonomialCurve base(entry.exponents);
                std::int64_t ell = 1 + static_cast<std::int64_t>(rng() % 4);
                std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 120);
                std::optional<ExtensionSpec> maybe;
                try {
                    maybe = make_extension(base, ell, m);
                } catch (const Error&) {
                    continue;
                }
                const ExtensionSpec& spec = *maybe;
                Parameterization proj = parameterize(spec);
                Parameterization aff = affine_parameterization(spec);
                auto check_poly = [&](const SparsePoly& p, const Parameterization& param,
                                      const char* name) {
                    ++polys;
                    c.require(vanishes_on(p, param),
                              std::string(name) + " fails to vanish at instance " +
                                  std::to_string(instances));
                };
                check_poly(affine_G(spec), aff, "G");
                check_poly(projective_F(spec), proj, "F");
                auto shapes = entry.chain ? chain_shapes(base) : xn_shapes(base);
                for (const auto& f : base_equations(base, shapes))
                    check_poly(f.padded(spec.nvars()), proj, "base equation");
                if (spec.kind == ExtensionKind::nice) {
                    if (fstar_condition_holds(spec, shapes))
                        check_poly(build_fstar(spec, shapes).fstar, proj, "F*");
                } else {
                    check_poly(bad_extension_gluing(spec).F, proj, "bad-extension F");
                }
                ++instances;
            }
            c.require(instances == 200, "only ran " + std::to_string(instances) + " instances");
            c.require(polys >= 4 * 200, "builder coverage too thin");
        },
        all_pass);

    run_criterion(
        6, "toric oracle contains the six reference generators", 30000.0,
        [](Check& c) {
            auto binomials = toric_binomials({3, 4, 6, 25}, 7);
            const std::vector<const char*> expected = {
                "x1^2 - x0*x3",          "x2^3 - x0*x3^2",
                "x3^6 - x0^2*x1*x2^2*x4", "x2*x3^4 - x0^3*x1*x4",
                "x1*x3^5 - x0^3*x2^2*x4", "x1*x2*x3^3 - x0^4*x4"};
            for (const char* text : expected) {
                SparsePoly want = SparsePoly::parse(text, 5);
                bool found = false;
                for (const auto& b : binomials)
                    if (b == want || b == -want) {
                        found = true;
                        break;
                    }
                c.require(found, std::string("missing generator ") + text);
            }
        },
        all_pass);

    run_criterion(
        7, "finite-field zero sets match the predicted sets", 120000.0,
        [](Check& c) {
            // Complete-intersection triples on extensions of (1,2,4).
            for (std::int64_t s : {2, 3}) {
                MonomialCurve base({1, 2, 4});
                ExtensionSpec spec = make_extension(base, 1, 4 * s);
                std::vector<SparsePoly> eqs;
                for (const auto& f : base_equations(base, chain_shapes(base)))
                    eqs.push_back(f.padded(5));
                eqs.push_back(projective_F(spec));
                for (int q : {5, 7}) {
                    auto t0 = std::chrono::steady_clock::now();
                    ZeroSetReport r =
                        zero_set_compare(eqs, parameterize(spec), FiniteFieldConfig{q, true});
                    double part_ms = std::chrono::duration<double, std::milli>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count();
                    c.require(part_ms < 60000.0, "zero-set enumeration over 60 s");
                    c.require(r.extras.empty(), "extras at s=" + std::to_string(s) + " q=" +
                                                    std::to_string(q));
                    c.require(r.missing.empty(), "missing at s=" + std::to_string(s) + " q=" +
                                                     std::to_string(q));
                    c.require(r.label.find("EVIDENCE") != std::string::npos,
                              "report must be labeled evidence");
                }
            }
            // Without F* the zero set of (f1, f2, F) is the curve plus the
            // line with the first three coordinates zero.
            MonomialCurve base({3, 4, 6});
            ExtensionSpec spec = make_extension(base, 1, 25);
            std::vector<SparsePoly> eqs;
            for (const auto& f : base_equations(base, xn_shapes(base)))
                eqs.push_back(f.padded(5));
            eqs.push_back(projective_F(spec));
            for (int q : {5, 7}) {
                auto t0 = std::chrono::steady_clock::now();
                ZeroSetReport r =
                    zero_set_compare(eqs, parameterize(spec), FiniteFieldConfig{q, true}, 3);
                double part_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                c.require(part_ms < 60000.0, "zero-set enumeration over 60 s");
                c.require(r.extras.empty() && r.missing.empty(),
                          "curve-plus-line prediction fails at q=" + std::to_string(q));
                c.require(r.label.find("EVIDENCE") != std::string::npos,
                          "report must be labeled evidence");
            }
        },
        all_pass);

    run_criterion(
        8, "random bad extensions glue with verified witnesses", 10000.0,
        [](Check& c) {
            std::mt19937 rng(20240811);
            int built = 0, attempts = 0;
            while (built < 20 && attempts < 20000) {
                ++attempts;
                const ShapedBase& entry = shaped_bases()[rng() % shaped_bases().size()];
                MonomialCurve base(entry.exponents);
                std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 60);
                std::optional<ExtensionSpec> probe;
                try {
                    probe = make_extension(base, 1, m);
                } catch (const Error&) {
                    continue;
                }
                std::int64_t ell = probe->delta() + static_cast<std::int64_t>(rng() % 4);
                if (std::gcd(ell, m) != 1) continue;
                ExtensionSpec spec = make_extension(base, ell, m);
                if (spec.kind != ExtensionKind::bad) continue;

                BadExtensionGluingResult r = bad_extension_gluing(spec);
                c.require(r.decision.glues, "bad extension must glue");
                std::int64_t value = 0, weight = 0;
                for (std::size_t i = 0; i < base.n(); ++i) {
                    value += r.decision.witness[i] * ell * base.exponents()[i];
                    weight += r.decision.witness[i];
                }
                c.require(value == r.decision.delta * m, "condition (I) recheck");
                c.require(weight <= r.decision.delta, "condition (II) recheck");
                c.require(vanishes_on(r.F, parameterize(spec)), "F must vanish on the extension");
                ++built;
            }
            c.require(built == 20, "only built " + std::to_string(built) + " bad extensions");
        },
        all_pass);

    std::cout << (all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return all_pass ? 0 : 1;
}
