#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parmreach/poly_pool.hpp"
#include "parmreach/polynomial.hpp"

namespace parmreach {

/// Partial factorization of a polynomial: an integer constant times a
/// product of pairwise distinct bases raised to positive exponents.
///
/// Bases are interned in the current session's pool, are non-constant,
/// have integer content 1 and a positive leading coefficient. The integer
/// content of the represented polynomial is carried as the constant, which
/// plays the role of the constant base. With this convention every value
/// is in reduced form: the zero polynomial is the empty factorization
/// (constant 0, no bases) and the polynomial 1 is {1^1} (constant 1, no
/// bases).
class Factorization {
public:
    using Bases = std::map<PolyHandle, std::uint32_t>;
    using RawFactor = std::pair<Polynomial, std::uint32_t>;

    /// {1^1}
    Factorization() = default;
    static Factorization zero();
    static Factorization one() { return Factorization{}; }
    static Factorization constant(Integer c);
    /// Single-base factorization {g^1} (content split off).
    static Factorization of(const Polynomial& g);
    /// Builds from explicit bases; same as reduce(raw).
    static Factorization from_factors(const std::vector<RawFactor>& raw);

    bool is_zero() const noexcept { return constant_ == 0; }
    bool is_one() const noexcept { return constant_ == 1 && bases_.empty(); }
    bool is_constant() const noexcept { return bases_.empty(); }
    const Integer& constant_factor() const noexcept { return constant_; }
    const Bases& bases() const noexcept { return bases_; }
    std::uint32_t exponent(PolyHandle base) const;

    /// Factor list including the constant when it is not 1; {1^1} for one,
    /// empty for zero.
    std::vector<RawFactor> factors() const;

    Polynomial expand() const;
    Rational evaluate(const Assignment& u) const;
    /// Sum of exponent * total degree over all bases.
    std::uint64_t weighted_degree() const;

    /// "(base)^e" products, constant first when not 1.
    std::string to_string() const;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.constant_ == b.constant_ && a.bases_ == b.bases_;
    }

    // Mutation used by the operators below.
    void multiply_base(PolyHandle base, std::uint32_t exponent);
    void multiply_constant(const Integer& c);
    void remove_base(PolyHandle base) { bases_.erase(base); }
    Bases& mutable_bases() { return bases_; }
    void set_constant(Integer c) { constant_ = std::move(c); }

private:
    Integer constant_ = 1;
    Bases bases_;
};

/// Reduction of an arbitrary factor list: drops unit bases and zero
/// exponents, merges equal bases, pulls integer content into the constant.
Factorization reduce(const std::vector<Factorization::RawFactor>& raw);

/// Common multiple (max exponents, lcm of constants).
Factorization fcm(const Factorization& f1, const Factorization& f2);
/// Common divisor (min exponents over shared bases, gcd of constants).
Factorization fcd(const Factorization& f1, const Factorization& f2);
/// Product (exponent addition).
Factorization fmul(const Factorization& f1, const Factorization& f2);
/// Quotient by exponent subtraction clamped at zero. Only a factorization
/// of g1/g2 when f1 is sufficiently refined with respect to f2. With
/// `verify`, the result is multiplied back and InsufficientRefinement is
/// raised on mismatch.
Factorization fdiv(const Factorization& f1, const Factorization& f2, bool verify = false);
/// Sum; the common divisor of the operands is kept factored.
Factorization fadd(const Factorization& f1, const Factorization& f2);

/// Result of gcd_factored: common * left = g1 and common * right = g2,
/// with left and right coprime.
struct GcdTriple {
    Factorization cofactor_left;
    Factorization cofactor_right;
    Factorization common;
};

/// Optional observer for gcd_factored; receives the weighted degree of the
/// pending factor set at the start of each outer iteration.
using GcdTraceHook = std::function<void(std::uint64_t pending_weighted_degree)>;

/// Gcd over factorizations with refinement. Bases are first expanded
/// through the pool's known splittings; every nontrivial split found while
/// computing the gcd is recorded back into the pool. Operands must not
/// represent 0.
GcdTriple gcd_factored(const Factorization& f1, const Factorization& f2, const GcdTraceHook& hook = {});

/// Rewrites every base with a recorded splitting into its parts.
Factorization refined(const Factorization& f);

/// Refinement of g1 after gcd_factored: cofactor_left * common.
inline Factorization refine_left(const GcdTriple& t) { return fmul(t.cofactor_left, t.common); }
inline Factorization refine_right(const GcdTriple& t) { return fmul(t.cofactor_right, t.common); }

}  // namespace parmreach
