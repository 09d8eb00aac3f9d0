// SPDX-License-Identifier: Apache-2.0
//
// Exact sparse multivariate polynomials over arbitrary-precision integers,
// with the substitution and rewriting operators the equation builders use.
// Values are immutable in spirit: every operation returns a new polynomial,
// so sharing across threads is safe.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stci/errors.hpp"

namespace stci {

using Coeff = boost::multiprecision::cpp_int;

/// Exponent vector over a fixed variable list x0, x1, ..., x_{nvars-1}.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::int64_t> exps);

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::int64_t operator[](std::size_t i) const { return exps_[i]; }
    std::int64_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exps_; }

    std::int64_t degree() const;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(std::int64_t k) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::int64_t> exps_;
};

/// Canonical term order used for serialization and iteration: higher total
/// degree first; within a degree, lexicographically smaller exponent vector
/// (read from x0 upward) first.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
public:
    using TermMap = std::map<Monomial, Coeff, TermOrder>;

    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, Coeff c);
    static SparsePoly monomial(Monomial m, Coeff c = 1);
    /// The single variable x_index (optionally raised to exp).
    static SparsePoly variable(std::size_t nvars, std::size_t index, std::int64_t exp = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Coeff coeff(const Monomial& m) const;
    std::int64_t total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    /// Adds c * m into this polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const Coeff& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
    SparsePoly pow(std::int64_t k) const;  // repeated squaring

    bool operator==(const SparsePoly&) const = default;

    /// Re-embeds into a wider variable list (new variables get exponent 0).
    SparsePoly padded(std::size_t new_nvars) const;

    /// Canonical text form, e.g. "x1*x2*x3^3 - x0^4*x4"; "0" when zero.
    std::string str() const;
    std::string str(const std::vector<std::string>& names) const;

    /// Parses the same grammar str() emits. Accepts an optional leading
    /// sign, integer coefficients, '*' between factors and '^' for powers.
    static SparsePoly parse(std::string_view text, std::size_t nvars);

private:
    void check_same_vars(const SparsePoly& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

/// Substitution x_last -> x_last^ell on the designated last variable;
/// a ring homomorphism.
SparsePoly gamma_ell(const SparsePoly& p, std::int64_t ell);

/// Multiplies each term by hom_var^(D - deg term), D the maximal total
/// degree, making the result homogeneous of degree D. hom_var must not
/// occur in p (errc::hom_var_occurs).
SparsePoly homogenize(const SparsePoly& p, std::size_t hom_var);

/// One rewriting step shape: x_{var_index}^threshold -> replacement, where
/// replacement = x0^(threshold-b) * x_t^b for a single t > var_index and
/// threshold > b > 0. Degree-preserving by construction.
struct RewriteRule {
    RewriteRule(std::size_t var_index, std::int64_t threshold, Monomial replacement);

    std::size_t var_index;
    std::int64_t threshold;
    Monomial replacement;
};

/// Normal form of p under the rules: in every term the exponent of
/// x_{var_index} ends up strictly below the rule threshold. Whole quotients
/// are substituted at once (x^e -> replacement^(e div a) * x^(e mod a)).
/// The rule shape guarantees termination and a unique normal form.
/// Throws errc::rule_conflict on duplicate var_index.
SparsePoly reduce(const SparsePoly& p, std::vector<RewriteRule> rules);

/// Replaces each variable by the given monomial image (all images over one
/// common variable list, typically the two parameters (u, v)) and expands.
SparsePoly substitute_monomials(const SparsePoly& p, const std::vector<Monomial>& images);

/// Sets one variable to 1 (drops its exponents). Dehomogenization helper.
SparsePoly substitute_one(const SparsePoly& p, std::size_t var);

}  // namespace stci
