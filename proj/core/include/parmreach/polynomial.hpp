#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "parmreach/variables.hpp"

namespace parmreach {

using Integer = mpz_class;
using Rational = mpq_class;

/// Total assignment of exact values to parameters.
using Assignment = std::map<Variable, Rational>;

/// Parses "3", "-1/2" or "0.25" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
/// Decimal approximation with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits = 12);

/// Power product of variables. Powers are kept sorted by variable id and
/// never hold a zero exponent; the empty product is the monomial 1.
class Monomial {
public:
    using Power = std::pair<std::uint32_t, std::uint32_t>;  // (variable id, exponent)

    Monomial() = default;
    static Monomial of(Variable v, std::uint32_t exponent = 1);
    static Monomial from_powers(std::vector<Power> powers);

    const std::vector<Power>& powers() const noexcept { return powers_; }
    bool is_one() const noexcept { return powers_.empty(); }
    std::uint32_t degree(Variable v) const noexcept;
    std::uint32_t total_degree() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    /// Requires divides(*this, other) for `other / *this`.
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /// Reverse lexicographic order: exponents are compared starting at the
    /// highest variable id; the first difference decides.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;

    std::size_t hash() const noexcept;

private:
    std::vector<Power> powers_;
};

struct Term {
    Integer coeff;
    Monomial mono;
};

/// Normalized multivariate polynomial over the integers. Terms are unique
/// per monomial, nonzero, and sorted in descending monomial order, so
/// structural equality is polynomial equality.
class Polynomial {
public:
    Polynomial() = default;  // zero
    Polynomial(Integer constant);
    Polynomial(long constant) : Polynomial(Integer(constant)) {}
    Polynomial(int constant) : Polynomial(Integer(constant)) {}
    static Polynomial variable(Variable v);
    static Polynomial monomial(Integer coeff, Monomial mono);
    /// Sorts and merges arbitrary terms.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /// Value of a constant polynomial; zero for the zero polynomial.
    Integer constant_value() const;
    const Term& leading_term() const { return terms_.front(); }
    const Integer& leading_coefficient() const { return terms_.front().coeff; }
    std::uint32_t total_degree() const noexcept;
    std::uint32_t degree(Variable v) const noexcept;
    std::vector<Variable> variables() const;
    /// Highest variable id occurring, if any.
    std::optional<Variable> main_variable() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(std::uint32_t exponent) const;
    Polynomial scaled(const Integer& factor) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Rational evaluate(const Assignment& u) const;
    std::size_t hash() const noexcept;

    /// Expanded rendering in session variable names, e.g. "3*p^2 - 10".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Rational poly_eval(const Polynomial& g, const Assignment& u) { return g.evaluate(u); }

/// Exact quotient a / b. Throws NotDivisible when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
/// Returns the quotient if b divides a exactly.
std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b);

/// Gcd of the integer coefficients (non-negative).
Integer integer_content(const Polynomial& g);

/// Greatest common divisor over Z[V] with positive leading coefficient.
/// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Splits g into (c, p) with g = c * p, p primitive with positive leading
/// coefficient. For constant g the split is (g, 1).
std::pair<Integer, Polynomial> split_content(const Polynomial& g);

enum class Irreducibility { Irreducible, Unknown };

/// Cheap sound test: constants and primitive polynomials of total degree 1
/// are certified, everything else is Unknown.
Irreducibility is_irreducible_heuristic(const Polynomial& g);

}  // namespace parmreach

template <>
struct std::hash<parmreach::Polynomial> {
    std::size_t operator()(const parmreach::Polynomial& p) const noexcept { return p.hash(); }
};
