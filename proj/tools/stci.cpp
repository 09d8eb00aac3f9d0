// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: classify curves and extensions, decide gluing,
// synthesize the hypersurface equations and run the verification oracles.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stci/curves.hpp"
#include "stci/gluing.hpp"
#include "stci/numsg.hpp"
#include "stci/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace stci;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCondition = 3;
constexpr int kExitVerification = 4;

int exit_code_for(errc code) {
    switch (code) {
        case errc::condition_fails:
        case errc::shape_mismatch:
            return kExitCondition;
        case errc::does_not_vanish:
            return kExitVerification;
        default:
            return kExitUsage;
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail(errc::invalid_argument, "empty entry in integer list");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) fail(errc::invalid_argument, "expected a comma-separated integer list");
    return out;
}

// "3..10" or a single value "4".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::int64_t v = std::stoll(text);
        return {v, v};
    }
    std::int64_t lo = std::stoll(text.substr(0, dots));
    std::int64_t hi = std::stoll(text.substr(dots + 2));
    if (hi < lo) fail(errc::invalid_argument, "range upper bound below lower bound");
    return {lo, hi};
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

struct Output {
    bool as_json = false;
    json doc;
    std::ostringstream text;
    int exit_code = kExitOk;

    void finish(std::chrono::steady_clock::time_point start) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        double ms = std::chrono::duration<double, std::milli>(elapsed).count();
        if (as_json) {
            doc["timing_ms"] = ms;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
    }
};

json equation_json(const std::string& name, const SparsePoly& p) {
    return json{{"name", name}, {"text", p.str()}, {"nvars", p.nvars()}};
}

json decision_json(const GluingDecision& d) {
    json out;
    switch (d.selector) {
        case SemigroupSplit::Selector::interior:
            out["split"] = "i0=" + std::to_string(d.i0);
            break;
        case SemigroupSplit::Selector::endpoint_zero: out["split"] = "endpoint (M,0)"; break;
        case SemigroupSplit::Selector::endpoint_max: out["split"] = "endpoint (0,M)"; break;
        case SemigroupSplit::Selector::non_singleton: out["split"] = "non-singleton"; break;
    }
    out["glues"] = d.glues;
    if (d.glues) {
        out["delta"] = d.delta;
        out["witness"] = d.witness;
        out["slack"] = d.slack;
    } else {
        out["reason"] = glue_reason_name(*d.reason);
        if (d.selector == SemigroupSplit::Selector::interior) out["delta"] = d.delta;
    }
    return out;
}

std::string decision_text(const GluingDecision& d) {
    std::ostringstream line;
    switch (d.selector) {
        case SemigroupSplit::Selector::interior: line << "i0=" << d.i0; break;
        case SemigroupSplit::Selector::endpoint_zero: line << "endpoint (M,0)"; break;
        case SemigroupSplit::Selector::endpoint_max: line << "endpoint (0,M)"; break;
        case SemigroupSplit::Selector::non_singleton: line << "non-singleton"; break;
    }
    if (d.glues) {
        line << ": GLUES witness d=(" << join(d.witness) << ") Delta=" << d.delta
             << " slack=" << d.slack;
    } else {
        line << ": no gluing [" << glue_reason_name(*d.reason) << "]";
        if (d.selector == SemigroupSplit::Selector::interior) line << " Delta=" << d.delta;
    }
    return line.str();
}

json zero_set_json(const ZeroSetReport& r) {
    json out;
    out["q"] = r.q;
    out["label"] = r.label;
    out["line_mode"] = r.line_mode;
    out["hypersurface_points"] = r.hypersurface_points;
    out["curve_points"] = r.curve_points;
    out["extras"] = r.extras;
    out["missing"] = r.missing;
    return out;
}

std::vector<BinomialShape> shapes_for(const MonomialCurve& base, const std::string& kind) {
    if (kind == "xn") return xn_shapes(base);
    if (kind == "chain") return chain_shapes(base);
    if (kind == "none") return {};
    fail(errc::invalid_argument, "unknown shape kind '" + kind + "' (use xn, chain or none)");
}

// ---------------------------------------------------------------------------

int cmd_delta(Output& out, const std::string& gens_text, std::int64_t m, bool all) {
    SemigroupGens gens(parse_int_list(gens_text));
    Representation rep = degree(m, gens);

    out.doc["job"] = {{"command", "delta"}, {"gens", gens.gens()}, {"m", m}};
    out.doc["verdicts"] = json::array(
        {{{"delta", rep.weight}, {"representation", rep.coeffs}}});
    out.text << "delta(" << m << ") = " << rep.weight << "\n"
             << "representation: (" << join(rep.coeffs) << ") over gens (" << gens_text << ")\n";
    if (all) {
        auto reps = all_minimal_representations(m, gens);
        json list = json::array();
        out.text << "all minimal representations:\n";
        for (const auto& r : reps) {
            list.push_back(r.coeffs);
            out.text << "  (" << join(r.coeffs) << ")\n";
        }
        out.doc["verdicts"][0]["all_minimal"] = list;
    }
    return kExitOk;
}

int cmd_glue(Output& out, const std::string& curve_text) {
    std::vector<std::int64_t> exps = parse_int_list(curve_text);
    if (exps.size() < 3) fail(errc::invalid_argument, "need at least 3 exponents");
    GluingReport report = check_all_splits(exps);

    out.doc["job"] = {{"command", "glue"}, {"curve", exps}};
    json verdicts = json::array();
    out.text << "curve (" << curve_text << ")\n";
    for (const auto& d : report.splits) {
        verdicts.push_back(decision_json(d));
        out.text << "  " << decision_text(d) << "\n";
    }
    out.doc["verdicts"] = verdicts;
    out.doc["overall_glues"] = report.overall;
    if (report.overall) {
        for (const auto& d : report.splits)
            if (d.glues) {
                out.text << "GLUES at i0=" << d.i0 << ", witness d=(" << join(d.witness)
                         << ")\n";
                break;
            }
    } else {
        out.text << "NO GLUING (all splits fail)\n";
    }
    return kExitOk;
}

int cmd_extend(Output& out, const std::string& base_text, std::int64_t ell, std::int64_t m,
               const std::string& shape_kind) {
    MonomialCurve base(parse_int_list(base_text));
    ExtensionSpec spec = make_extension(base, ell, m);
    Parameterization proj = parameterize(spec);
    Parameterization aff = affine_parameterization(spec);

    out.doc["job"] = {{"command", "extend"},
                      {"base", base.exponents()},
                      {"ell", ell},
                      {"m", m},
                      {"shape", shape_kind}};
    out.doc["verdicts"] = json::array();
    json& verdicts = out.doc["verdicts"];
    json equations = json::array();
    json vanishing = json::array();

    const bool nice = spec.kind == ExtensionKind::nice;
    verdicts.push_back({{"kind", nice ? "nice" : "bad"},
                        {"delta", spec.delta()},
                        {"ell", ell},
                        {"representation", spec.rep.coeffs},
                        {"extension_exponents", spec.extension_exponents()}});
    out.text << "extension (" << join(spec.extension_exponents()) << ") of base (" << base_text
             << ")\n"
             << "kind: " << (nice ? "nice" : "bad") << " (delta=" << spec.delta()
             << (nice ? " > " : " <= ") << "ell=" << ell << "), representation ("
             << join(spec.rep.coeffs) << ")\n";

    bool all_vanish = true;
    auto emit = [&](const std::string& name, const SparsePoly& p, const Parameterization& param) {
        equations.push_back(equation_json(name, p));
        bool ok = vanishes_on(p, param);
        all_vanish = all_vanish && ok;
        vanishing.push_back({{"name", name}, {"ok", ok}});
        out.text << name << " = " << p.str() << "\n";
    };

    emit("G", affine_G(spec), aff);
    emit("F", projective_F(spec), proj);

    std::optional<bool> eq1;
    if (nice) {
        std::vector<BinomialShape> shapes = shapes_for(base, shape_kind);
        auto base_eqs = base_equations(base, shapes);
        for (std::size_t i = 0; i < base_eqs.size(); ++i)
            emit("f" + std::to_string(i + 1), base_eqs[i].padded(spec.nvars()), proj);
        FStarResult res = build_fstar(spec, shapes);  // may raise ConditionFails
        emit("F*", res.fstar, proj);
        eq1 = check_eq1(spec, shapes, res);
        verdicts.push_back({{"p", res.p},
                            {"weights", res.weights},
                            {"gamma", res.gamma},
                            {"alpha", res.alpha}});
        out.text << "p=" << res.p << " gamma=" << res.gamma << " alpha=" << res.alpha << "\n";
    } else {
        BadExtensionGluingResult glue = bad_extension_gluing(spec);
        verdicts.push_back(decision_json(glue.decision));
        out.text << "gluing split on the m-entry: " << decision_text(glue.decision) << "\n";
    }

    out.doc["equations"] = equations;
    out.doc["oracle"] = {{"vanishing", vanishing}};
    if (eq1) {
        out.doc["oracle"]["eq1"] = *eq1;
        out.text << "power identity check: " << (*eq1 ? "ok" : "FAILED") << "\n";
    }
    out.text << "vanishing checks: " << (all_vanish ? "all ok" : "FAILURES") << "\n";
    if (!all_vanish || (eq1 && !*eq1)) return kExitVerification;
    return kExitOk;
}

int cmd_verify(Output& out, const std::string& curve_text, std::int64_t toric_bound,
               const std::vector<std::string>& eq_texts, const std::string& q_text,
               std::int64_t line_prefix) {
    std::vector<std::int64_t> exps = parse_int_list(curve_text);
    SemigroupGens validate(exps);  // ascending, positive, gcd 1
    Parameterization param = parameterize(exps);
    std::size_t nv = exps.size() + 1;

    out.doc["job"] = {{"command", "verify"},
                      {"curve", exps},
                      {"toric_bound", toric_bound},
                      {"line", line_prefix}};
    out.text << "curve (" << curve_text << ")\n";

    GluingReport gluing = check_all_splits(exps);
    json verdicts = json::array();
    for (const auto& d : gluing.splits) verdicts.push_back(decision_json(d));
    out.doc["verdicts"] = verdicts;
    out.doc["overall_glues"] = gluing.overall;
    out.text << "gluing: " << (gluing.overall ? "GLUES" : "no split glues") << "\n";

    bool ok = true;
    json equations = json::array();
    json vanishing = json::array();

    if (toric_bound > 0) {
        auto binomials = toric_binomials(exps, toric_bound);
        out.text << "toric binomials up to degree " << toric_bound << ": " << binomials.size()
                 << "\n";
        for (std::size_t i = 0; i < binomials.size(); ++i) {
            const auto& b = binomials[i];
            equations.push_back(equation_json("toric" + std::to_string(i + 1), b));
            bool v = vanishes_on(b, param);
            ok = ok && v;
            vanishing.push_back({{"name", "toric" + std::to_string(i + 1)}, {"ok", v}});
            out.text << "  " << b.str() << "\n";
        }
    }

    json zero_sets = json::array();
    if (!eq_texts.empty()) {
        std::vector<SparsePoly> eqs;
        for (std::size_t i = 0; i < eq_texts.size(); ++i) {
            SparsePoly p = SparsePoly::parse(eq_texts[i], nv);
            equations.push_back(equation_json("eq" + std::to_string(i + 1), p));
            bool v = vanishes_on(p, param);
            ok = ok && v;
            vanishing.push_back({{"name", "eq" + std::to_string(i + 1)}, {"ok", v}});
            out.text << "eq" << (i + 1) << " = " << p.str() << (v ? "  [vanishes]" : "  [DOES NOT VANISH]")
                     << "\n";
            eqs.push_back(std::move(p));
        }
        std::vector<int> qs;
        if (q_text.empty()) {
            qs = default_field_sizes(exps);
        } else {
            for (std::int64_t q : parse_int_list(q_text)) qs.push_back(static_cast<int>(q));
        }
        for (int q : qs) {
            ZeroSetReport r = zero_set_compare(eqs, param, FiniteFieldConfig{q, true},
                                               static_cast<std::size_t>(line_prefix));
            zero_sets.push_back(zero_set_json(r));
            bool exact = r.extras.empty() && r.missing.empty();
            ok = ok && exact;
            out.text << "zero set over F_" << q << ": " << r.hypersurface_points
                     << " hypersurface points, " << r.curve_points << " curve points, "
                     << r.extras.size() << " extras, " << r.missing.size() << " missing ["
                     << r.label << "]\n";
        }
    }

    out.doc["equations"] = equations;
    out.doc["oracle"] = {{"vanishing", vanishing}, {"zero_set", zero_sets}};
    out.text << (ok ? "verification ok\n" : "VERIFICATION FAILED\n");
    return ok ? kExitOk : kExitVerification;
}

struct SweepInstance {
    std::string params;
    bool ok = true;
    std::string detail;
};

int cmd_sweep(Output& out, const std::string& family, const std::string& s_text,
              const std::string& ell_text, const std::string& n_text) {
    auto [s_lo, s_hi] = parse_range(s_text);
    auto [l_lo, l_hi] = parse_range(ell_text);
    std::vector<SweepInstance> instances;

    if (family == "ex45") {
        for (std::int64_t s = s_lo; s <= s_hi; ++s) {
            SweepInstance inst;
            inst.params = "s=" + std::to_string(s);
            try {
                MonomialCurve base({3, 4, 6});
                ExtensionSpec spec = make_extension(base, 1, 6 * s + 7);
                auto shapes = xn_shapes(base);
                Parameterization proj = parameterize(spec);
                FStarResult res = build_fstar(spec, shapes);
                bool vanish = vanishes_on(res.fstar, proj) &&
                              vanishes_on(projective_F(spec), proj);
                for (const auto& f : base_equations(base, shapes))
                    vanish = vanish && vanishes_on(f.padded(spec.nvars()), proj);
                bool eq1 = check_eq1(spec, shapes, res);
                GluingReport glue = check_all_splits(spec.extension_exponents());
                inst.ok = vanish && eq1 && !glue.overall;
                inst.detail = std::string("gluing=") + (glue.overall ? "GLUES" : "none") +
                              " fstar_terms=" + std::to_string(res.fstar.term_count()) +
                              " vanishing=" + (vanish ? "ok" : "FAIL") +
                              " eq1=" + (eq1 ? "ok" : "FAIL");
            } catch (const Error& e) {
                inst.ok = false;
                inst.detail = std::string(errc_name(e.code())) + ": " + e.what();
            }
            instances.push_back(std::move(inst));
        }
    } else if (family == "ex56") {
        for (std::int64_t ell = l_lo; ell <= l_hi; ++ell)
            for (std::int64_t s = s_lo; s <= s_hi; ++s) {
                if (std::gcd(ell, 4 * s) != 1 || s <= ell) continue;
                SweepInstance inst;
                inst.params = "ell=" + std::to_string(ell) + " s=" + std::to_string(s);
                try {
                    MonomialCurve base({1, 2, 4});
                    ExtensionSpec spec = make_extension(base, ell, 4 * s);
                    Parameterization proj = parameterize(spec);
                    bool vanish = vanishes_on(projective_F(spec), proj);
                    for (const auto& f : base_equations(base, chain_shapes(base)))
                        vanish = vanish && vanishes_on(f.padded(spec.nvars()), proj);
                    inst.ok = vanish && spec.kind == ExtensionKind::nice;
                    inst.detail = std::string("kind=") +
                                  (spec.kind == ExtensionKind::nice ? "nice" : "bad") +
                                  " F=" + projective_F(spec).str() +
                                  " vanishing=" + (vanish ? "ok" : "FAIL");
                } catch (const Error& e) {
                    inst.ok = false;
                    inst.detail = std::string(errc_name(e.code())) + ": " + e.what();
                }
                instances.push_back(std::move(inst));
            }
    } else if (family == "rational-normal") {
        auto [n_lo, n_hi] = parse_range(n_text);
        for (std::int64_t n = n_lo; n <= n_hi; ++n)
            for (std::int64_t ell = l_lo; ell <= l_hi; ++ell)
                for (std::int64_t s = s_lo; s <= s_hi; ++s) {
                    if (std::gcd(ell, s * n) != 1) continue;
                    SweepInstance inst;
                    inst.params = "n=" + std::to_string(n) + " ell=" + std::to_string(ell) +
                                  " s=" + std::to_string(s);
                    try {
                        std::vector<std::int64_t> exps(static_cast<std::size_t>(n));
                        std::iota(exps.begin(), exps.end(), 1);
                        MonomialCurve base(exps);
                        ExtensionSpec spec = make_extension(base, ell, s * n);
                        Parameterization proj = parameterize(spec);
                        bool vanish = vanishes_on(projective_F(spec), proj);
                        for (const auto& f : base_equations(base, xn_shapes(base)))
                            vanish = vanish && vanishes_on(f.padded(spec.nvars()), proj);
                        std::string kind;
                        if (spec.kind == ExtensionKind::bad) {
                            BadExtensionGluingResult glue = bad_extension_gluing(spec);
                            vanish = vanish && vanishes_on(glue.F, proj) && glue.decision.glues;
                            kind = "bad (glues)";
                        } else {
                            FStarResult res = build_fstar(spec, {});
                            vanish = vanish && vanishes_on(res.fstar, proj);
                            kind = "nice";
                        }
                        inst.ok = vanish;
                        inst.detail = "kind=" + kind + " vanishing=" + (vanish ? "ok" : "FAIL");
                    } catch (const Error& e) {
                        inst.ok = false;
                        inst.detail = std::string(errc_name(e.code())) + ": " + e.what();
                    }
                    instances.push_back(std::move(inst));
                }
    } else {
        fail(errc::invalid_argument, "unknown family '" + family +
                                         "' (use ex45, ex56 or rational-normal)");
    }

    out.doc["job"] = {{"command", "sweep"}, {"family", family}};
    json list = json::array();
    bool all_ok = true;
    std::size_t passed = 0;
    for (const auto& inst : instances) {
        list.push_back({{"params", inst.params}, {"ok", inst.ok}, {"detail", inst.detail}});
        all_ok = all_ok && inst.ok;
        passed += inst.ok ? 1 : 0;
        out.text << (inst.ok ? "PASS " : "FAIL ") << inst.params << ": " << inst.detail << "\n";
    }
    out.doc["verdicts"] = list;
    out.text << passed << "/" << instances.size() << " instances ok\n";
    if (instances.empty()) fail(errc::invalid_argument, "sweep selected no instances");
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equations and certificates for monomial curve extensions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* delta = app.add_subcommand("delta", "semigroup degree of m");
    std::string delta_gens;
    std::int64_t delta_m = 0;
    bool delta_all = false;
    delta->add_option("--gens", delta_gens, "semigroup generators, ascending")->required();
    delta->add_option("--m", delta_m, "target value")->required();
    delta->add_flag("--all", delta_all, "list every minimal representation");

    auto* glue = app.add_subcommand("glue", "gluing verdicts for a projective monomial curve");
    std::string glue_curve;
    glue->add_option("--curve", glue_curve, "curve exponents, ascending")->required();

    auto* extend = app.add_subcommand("extend", "classify an extension and emit its equations");
    std::string ext_base, ext_shape = "xn";
    std::int64_t ext_ell = 1, ext_m = 0;
    extend->add_option("--base", ext_base, "base curve exponents")->required();
    extend->add_option("--ell", ext_ell, "scaling factor ell")->required();
    extend->add_option("--m", ext_m, "new exponent m")->required();
    extend->add_option("--shape", ext_shape, "base hypersurface shape: xn, chain or none");

    auto* verify = app.add_subcommand("verify", "run the oracle suite on a curve");
    std::string ver_curve, ver_q;
    std::int64_t ver_bound = 7, ver_line = 0;
    std::vector<std::string> ver_eqs;
    verify->add_option("--curve", ver_curve, "curve exponents, ascending")->required();
    verify->add_option("--toric-bound", ver_bound, "toric binomial degree bound (0 skips)");
    verify->add_option("--eqs", ver_eqs, "equations over x0..xk to check (repeatable)");
    verify->add_option("--q", ver_q, "field sizes, e.g. 5,7 (default: automatic)");
    verify->add_option("--line", ver_line,
                       "expect the line with this many leading coordinates zero");

    auto* sweep = app.add_subcommand("sweep", "run a named instance family");
    std::string sw_family, sw_s = "3..10", sw_ell = "1..3", sw_n = "3..4";
    sweep->add_option("--family", sw_family, "ex45, ex56 or rational-normal")->required();
    sweep->add_option("--s", sw_s, "s range, e.g. 3..10");
    sweep->add_option("--ell", sw_ell, "ell range");
    sweep->add_option("--n", sw_n, "n range (rational-normal only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    Output out;
    out.as_json = format == "json";
    auto start = std::chrono::steady_clock::now();
    try {
        int rc = kExitOk;
        if (*delta) rc = cmd_delta(out, delta_gens, delta_m, delta_all);
        else if (*glue) rc = cmd_glue(out, glue_curve);
        else if (*extend) rc = cmd_extend(out, ext_base, ext_ell, ext_m, ext_shape);
        else if (*verify) rc = cmd_verify(out, ver_curve, ver_bound, ver_eqs, ver_q, ver_line);
        else if (*sweep) rc = cmd_sweep(out, sw_family, sw_s, sw_ell, sw_n);
        out.finish(start);
        return rc;
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
