#pragma once

#include <string>

#include "parmreach/factorization.hpp"

namespace parmreach {

/// Quotient of two factorized polynomials. Values produced by the
/// arithmetic below are canceled: numerator and denominator are coprime
/// and the denominator's constant is positive. Zero is 0 / 1.
class RationalFunction {
public:
    RationalFunction() : num_(Factorization::zero()) {}
    RationalFunction(const Rational& value);
    RationalFunction(long value) : RationalFunction(Rational(value)) {}
    RationalFunction(int value) : RationalFunction(Rational(value)) {}
    explicit RationalFunction(const Polynomial& p);
    /// Builds num/den and cancels. Throws DivisionByZeroFunction if den is 0.
    RationalFunction(Factorization num, Factorization den);
    static RationalFunction from_polynomials(const Polynomial& num, const Polynomial& den);
    static RationalFunction variable(Variable v) { return RationalFunction(Polynomial::variable(v)); }

    const Factorization& num() const noexcept { return num_; }
    const Factorization& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Exact value of a constant function.
    Rational constant_value() const;

    /// Throws EvalDenominatorZero at a pole.
    Rational evaluate(const Assignment& u) const;

    /// "(<numerator>)/(<denominator>)" in expanded form.
    std::string to_string() const;
    /// Products of parenthesized bases with exponents.
    std::string to_factored_string() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    /// Equality of canonical forms (expanded numerator and denominator).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

private:
    struct Raw {};
    RationalFunction(Raw, Factorization num, Factorization den)
        : num_(std::move(num)), den_(std::move(den)) {}

    friend RationalFunction rf_add(const RationalFunction&, const RationalFunction&);
    friend RationalFunction rf_mul(const RationalFunction&, const RationalFunction&);
    friend RationalFunction cancel(const RationalFunction&);
    friend RationalFunction make_uncanceled(Factorization num, Factorization den);

    Factorization num_;
    Factorization den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/// Throws DivisionByZeroFunction when b is zero.
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
inline Rational rf_eval(const RationalFunction& f, const Assignment& u) { return f.evaluate(u); }

/// Divides numerator and denominator by their gcd (via gcd_factored) and
/// normalizes the sign of the denominator.
RationalFunction cancel(const RationalFunction& f);

/// A quotient kept exactly as given, without cancellation (for tests of
/// cancel() and representation independence).
RationalFunction make_uncanceled(Factorization num, Factorization den);

}  // namespace parmreach
