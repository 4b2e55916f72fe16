#include "parmreach/rational_function.hpp"

#include "parmreach/errors.hpp"
#include "parmreach/session.hpp"

namespace parmreach {
namespace {

// Sign normalization plus the optional pool-capacity fallback.
void finish(Factorization& num, Factorization& den) {
    if (num.is_zero()) {
        den = Factorization::one();
        return;
    }
    if (den.constant_factor() < 0) {
        num.set_constant(-num.constant_factor());
        den.set_constant(-den.constant_factor());
    }
    if (current_session().pool().over_capacity()) {
        num = Factorization::of(num.expand());
        den = Factorization::of(den.expand());
    }
}

}  // namespace

RationalFunction::RationalFunction(const Rational& value)
    : num_(Factorization::constant(value.get_num())), den_(Factorization::constant(value.get_den())) {
    if (num_.is_zero()) den_ = Factorization::one();
}

RationalFunction::RationalFunction(const Polynomial& p) : num_(Factorization::of(p)) {}

RationalFunction::RationalFunction(Factorization num, Factorization den) {
    if (den.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
    *this = cancel(RationalFunction(Raw{}, std::move(num), std::move(den)));
}

RationalFunction RationalFunction::from_polynomials(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(Factorization::of(num), Factorization::of(den));
}

RationalFunction make_uncanceled(Factorization num, Factorization den) {
    if (den.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
    return RationalFunction(RationalFunction::Raw{}, std::move(num), std::move(den));
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value() of a non-constant rational function");
    Rational r(num_.constant_factor(), den_.constant_factor());
    r.canonicalize();
    return r;
}

Rational RationalFunction::evaluate(const Assignment& u) const {
    Rational d = den_.evaluate(u);
    if (d == 0) throw EvalDenominatorZero("denominator " + den_.expand().to_string() + " vanishes");
    Rational r = num_.evaluate(u) / d;
    r.canonicalize();
    return r;
}

std::string RationalFunction::to_string() const {
    return "(" + num_.expand().to_string() + ")/(" + den_.expand().to_string() + ")";
}

std::string RationalFunction::to_factored_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_.set_constant(-r.num_.constant_factor());
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) { return *this = rf_add(*this, other); }
RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this = rf_add(*this, -other); }
RationalFunction& RationalFunction::operator*=(const RationalFunction& other) { return *this = rf_mul(*this, other); }
RationalFunction& RationalFunction::operator/=(const RationalFunction& other) { return *this = rf_div(*this, other); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.num() == b.num() && a.den() == b.den()) return true;
    return a.num().expand() * b.den().expand() == b.num().expand() * a.den().expand();
}

RationalFunction cancel(const RationalFunction& f) {
    if (f.num_.is_zero()) return RationalFunction();
    GcdTriple t = gcd_factored(f.num_, f.den_);
    Factorization num = std::move(t.cofactor_left);
    Factorization den = std::move(t.cofactor_right);
    finish(num, den);
    return RationalFunction(RationalFunction::Raw{}, std::move(num), std::move(den));
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    // cross-wise cancellation keeps the result canonical for canonical operands
    GcdTriple ab = gcd_factored(a.num_, b.den_);
    GcdTriple ba = gcd_factored(b.num_, a.den_);
    Factorization num = fmul(ab.cofactor_left, ba.cofactor_left);
    Factorization den = fmul(ba.cofactor_right, ab.cofactor_right);
    finish(num, den);
    return RationalFunction(RationalFunction::Raw{}, std::move(num), std::move(den));
}

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("division by the zero function");
    Factorization inv_num = b.den();
    Factorization inv_den = b.num();
    if (inv_den.constant_factor() < 0) {
        inv_num.set_constant(-inv_num.constant_factor());
        inv_den.set_constant(-inv_den.constant_factor());
    }
    return rf_mul(a, make_uncanceled(std::move(inv_num), std::move(inv_den)));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Factorization& h1 = a.num_;
    const Factorization& h2 = a.den_;
    const Factorization& q1 = b.num_;
    const Factorization& q2 = b.den_;

    Factorization g2 = fcm(h2, q2);
    Factorization h2p = fdiv(g2, h2);
    Factorization q2p = fdiv(g2, q2);
    Factorization d = fcd(h1, q1);
    Factorization h1p = fdiv(h1, d);
    Factorization q1p = fdiv(q1, d);
    Factorization sum = fadd(fmul(h1p, h2p), fmul(q1p, q2p));
    if (sum.is_zero()) return RationalFunction();
    return cancel(RationalFunction(RationalFunction::Raw{}, fmul(d, sum), std::move(g2)));
}

}  // namespace parmreach
