// SPDX-License-Identifier: Apache-2.0
#include "stci/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stci {

Monomial::Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
    for (std::int64_t e : exps_)
        if (e < 0) fail(errc::invalid_argument, "monomial exponents must be non-negative");
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (std::int64_t e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars())
        fail(errc::var_count_mismatch, "monomial product across different variable counts");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

Monomial Monomial::pow(std::int64_t k) const {
    if (k < 0) fail(errc::invalid_argument, "monomial power must be non-negative");
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] * k;
    return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    std::int64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() < b.exponents();
}

SparsePoly SparsePoly::constant(std::size_t nvars, Coeff c) {
    SparsePoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

SparsePoly SparsePoly::monomial(Monomial m, Coeff c) {
    SparsePoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index, std::int64_t exp) {
    if (index >= nvars) fail(errc::invalid_argument, "variable index out of range");
    Monomial m(nvars);
    m[index] = exp;
    return monomial(std::move(m));
}

Coeff SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

std::int64_t SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // leading term has maximal degree
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void SparsePoly::add_term(const Monomial& m, const Coeff& c) {
    if (m.nvars() != nvars_)
        fail(errc::var_count_mismatch, "term has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::check_same_vars(const SparsePoly& other) const {
    if (nvars_ != other.nvars_)
        fail(errc::var_count_mismatch, "operands have different variable counts");
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    lhs.check_same_vars(rhs);
    SparsePoly out(lhs.nvars());
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

SparsePoly SparsePoly::pow(std::int64_t k) const {
    if (k < 0) fail(errc::invalid_argument, "polynomial power must be non-negative");
    SparsePoly result = constant(nvars_, 1);
    SparsePoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

SparsePoly SparsePoly::padded(std::size_t new_nvars) const {
    if (new_nvars < nvars_)
        fail(errc::invalid_argument, "cannot pad to fewer variables");
    SparsePoly out(new_nvars);
    for (const auto& [m, c] : terms_) {
        std::vector<std::int64_t> exps = m.exponents();
        exps.resize(new_nvars, 0);
        out.terms_.emplace(Monomial(std::move(exps)), c);
    }
    return out;
}

std::string SparsePoly::str() const {
    std::vector<std::string> names(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) names[i] = "x" + std::to_string(i);
    return str(names);
}

std::string SparsePoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_)
        fail(errc::invalid_argument, "need one name per variable");
    if (terms_.empty()) return "0";

    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[i];
            if (m[i] != 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << factors;
        }
    }
    return out.str();
}

namespace {

// Minimal scanner for the canonical text form.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // Unicode minus sign, as produced by some typesetters.
    bool consume_minus() {
        skip_space();
        if (consume('-')) return true;
        if (text.substr(pos, 3) == "\xE2\x88\x92") {
            pos += 3;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail(errc::parse_error, "expected integer at offset " + std::to_string(pos));
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }
    Coeff big_integer() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            fail(errc::parse_error, "expected integer at offset " + std::to_string(pos));
        return Coeff(digits);
    }
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text, std::size_t nvars) {
    Scanner sc{text};
    SparsePoly out(nvars);
    bool first = true;
    while (!sc.done()) {
        bool negative = false;
        if (sc.consume_minus()) {
            negative = true;
        } else if (sc.consume('+')) {
            if (first) fail(errc::parse_error, "leading '+' not allowed");
        } else if (!first) {
            fail(errc::parse_error, "expected '+' or '-' between terms");
        }
        first = false;

        Coeff c = 1;
        Monomial m(nvars);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            c = sc.big_integer();
            saw_factor = true;
            if (!sc.consume('*')) {
                out.add_term(m, negative ? Coeff(-c) : c);
                continue;
            }
            saw_factor = false;
        }
        do {
            if (sc.peek() != 'x')
                fail(errc::parse_error, "expected variable at offset " + std::to_string(sc.pos));
            sc.consume('x');
            std::int64_t idx = sc.integer();
            if (idx < 0 || static_cast<std::size_t>(idx) >= nvars)
                fail(errc::parse_error, "variable index x" + std::to_string(idx) + " out of range");
            std::int64_t e = 1;
            if (sc.consume('^')) e = sc.integer();
            m[static_cast<std::size_t>(idx)] += e;
            saw_factor = true;
        } while (sc.consume('*'));
        if (!saw_factor) fail(errc::parse_error, "empty term");
        out.add_term(m, negative ? Coeff(-c) : c);
    }
    return out;
}

SparsePoly gamma_ell(const SparsePoly& p, std::int64_t ell) {
    if (ell < 1) fail(errc::invalid_argument, "substitution exponent must be positive");
    if (p.nvars() == 0) return p;
    std::size_t last = p.nvars() - 1;
    SparsePoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[last] *= ell;
        out.add_term(mm, c);
    }
    return out;
}

SparsePoly homogenize(const SparsePoly& p, std::size_t hom_var) {
    if (hom_var >= p.nvars()) fail(errc::invalid_argument, "homogenization variable out of range");
    for (const auto& [m, c] : p.terms())
        if (m[hom_var] != 0)
            fail(errc::hom_var_occurs, "homogenization variable already occurs in the polynomial");
    std::int64_t target = p.total_degree();
    SparsePoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[hom_var] = target - m.degree();
        out.add_term(mm, c);
    }
    return out;
}

RewriteRule::RewriteRule(std::size_t var_index_, std::int64_t threshold_, Monomial replacement_)
    : var_index(var_index_), threshold(threshold_), replacement(std::move(replacement_)) {
    if (var_index == 0 || var_index >= replacement.nvars())
        fail(errc::invalid_argument, "rewrite variable index out of range");
    if (threshold <= 0) fail(errc::invalid_argument, "rewrite threshold must be positive");
    if (replacement.degree() != threshold)
        fail(errc::invalid_argument, "replacement must preserve total degree");
    std::int64_t carrier = 0;
    for (std::size_t i = 1; i < replacement.nvars(); ++i) {
        if (replacement[i] == 0) continue;
        if (i <= var_index)
            fail(errc::invalid_argument,
                 "replacement may only involve x0 and variables above the rewritten one");
        if (carrier != 0)
            fail(errc::invalid_argument, "replacement must be x0^(a-b) * x_t^b for a single t");
        carrier = replacement[i];
    }
    if (carrier <= 0 || carrier >= threshold)
        fail(errc::invalid_argument, "replacement carrier exponent must satisfy 0 < b < a");
}

SparsePoly reduce(const SparsePoly& p, std::vector<RewriteRule> rules) {
    std::sort(rules.begin(), rules.end(),
              [](const RewriteRule& a, const RewriteRule& b) { return a.var_index < b.var_index; });
    for (std::size_t i = 0; i + 1 < rules.size(); ++i)
        if (rules[i].var_index == rules[i + 1].var_index)
            fail(errc::rule_conflict,
                 "two rules rewrite x" + std::to_string(rules[i].var_index));
    for (const RewriteRule& r : rules)
        if (r.replacement.nvars() != p.nvars())
            fail(errc::var_count_mismatch, "rule and polynomial variable counts differ");

    SparsePoly current = p;
    // Replacements only feed x0 and higher-indexed variables, so one sweep in
    // ascending variable order reaches the normal form; a second sweep
    // verifies it (and guards against invalid rule sets slipping through).
    for (int sweep = 0; sweep < 2; ++sweep) {
        bool changed = false;
        for (const RewriteRule& rule : rules) {
            SparsePoly next(current.nvars());
            for (const auto& [m, c] : current.terms()) {
                std::int64_t e = m[rule.var_index];
                if (e < rule.threshold) {
                    next.add_term(m, c);
                    continue;
                }
                changed = true;
                std::int64_t q = e / rule.threshold;
                Monomial mm = m;
                mm[rule.var_index] = e % rule.threshold;
                next.add_term(mm * rule.replacement.pow(q), c);
            }
            current = std::move(next);
        }
        if (!changed) break;
        if (sweep == 1) throw std::logic_error("rewriting did not reach a normal form");
    }
    return current;
}

SparsePoly substitute_monomials(const SparsePoly& p, const std::vector<Monomial>& images) {
    if (images.size() != p.nvars())
        fail(errc::var_count_mismatch, "need one image per variable");
    std::size_t target_vars = images.empty() ? 0 : images[0].nvars();
    for (const Monomial& im : images)
        if (im.nvars() != target_vars)
            fail(errc::var_count_mismatch, "images must share one variable list");

    SparsePoly out(target_vars);
    for (const auto& [m, c] : p.terms()) {
        Monomial image(target_vars);
        for (std::size_t v = 0; v < p.nvars(); ++v)
            if (m[v] != 0) image = image * images[v].pow(m[v]);
        out.add_term(image, c);
    }
    return out;
}

SparsePoly substitute_one(const SparsePoly& p, std::size_t var) {
    if (var >= p.nvars()) fail(errc::invalid_argument, "variable index out of range");
    SparsePoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace stci
