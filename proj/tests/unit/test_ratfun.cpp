#include <doctest.h>

#include <random>

#include "parmreach/errors.hpp"
#include "parmreach/model_parser.hpp"
#include "parmreach/rational_function.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

struct Vars {
    ScopedSession session;
    Variable pv = session.get().variables().intern("p");
    Variable qv = session.get().variables().intern("q");
    RationalFunction p = RationalFunction::variable(pv);
    RationalFunction q = RationalFunction::variable(qv);
};

RationalFunction rf(const char* text) { return parse_expression(text); }

}  // namespace

TEST_CASE("canonical form: coprime with positive denominator constant") {
    Vars v;
    RationalFunction f = rf("0.3*p") / (RationalFunction(1) - rf("0.3*p"));
    CHECK(f.to_string() == "(-3*p)/(3*p - 10)");
    CHECK(f == rf("3*p/(10-3*p)"));
    CHECK(RationalFunction().to_string() == "(0)/(1)");
    CHECK(RationalFunction((Rational(2) / 4)).to_string() == "(1)/(2)");
    CHECK(rf("(p^2-1)/(p+1)") == v.p - 1);
    CHECK(rf("(p^2-1)/(p+1)").den().is_one());
}

TEST_CASE("addition cancels") {
    Vars v;
    CHECK((RationalFunction(1) / v.p + RationalFunction(1) / (v.p * v.q)).to_string() == "(q + 1)/(p*q)");
    CHECK((v.p / (v.p + 1) + RationalFunction(1) / (v.p + 1)).is_one());
    CHECK((v.p - v.p).is_zero());
    CHECK((rf("1-p") + v.p).is_one());
}

TEST_CASE("multiplication and division") {
    Vars v;
    RationalFunction a = v.p / (v.q + 1);
    RationalFunction b = (v.q + 1) / v.p;
    CHECK((a * b).is_one());
    CHECK((a / a).is_one());
    CHECK_THROWS_AS(a / RationalFunction(), DivisionByZeroFunction);
    CHECK((a * RationalFunction()).is_zero());
    CHECK((RationalFunction(2) * RationalFunction((Rational(1) / 2))).is_one());
}

TEST_CASE("evaluation and poles") {
    Vars v;
    RationalFunction f = v.p / (v.q - 1);
    Assignment u{{v.pv, (Rational(1) / 2)}, {v.qv, Rational(3)}};
    CHECK(f.evaluate(u) == (Rational(1) / 4));
    Assignment pole{{v.pv, Rational(1)}, {v.qv, Rational(1)}};
    CHECK_THROWS_AS(f.evaluate(pole), EvalDenominatorZero);
    CHECK_THROWS_AS(f.evaluate({{v.pv, Rational(1)}}), MissingAssignment);
}

TEST_CASE("cancel normalizes uncanceled quotients") {
    Vars v;
    Polynomial p = Polynomial::variable(v.pv), q = Polynomial::variable(v.qv);
    RationalFunction raw = make_uncanceled(Factorization::from_factors({{p * q, 1}, {p + 1, 1}}),
                                           Factorization::from_factors({{p, 2}, {Polynomial(-2), 1}}));
    RationalFunction c = cancel(raw);
    CHECK(c == raw);
    CHECK(c.den().constant_factor() > 0);
    CHECK(c.to_string() == "(-p*q - q)/(2*p)");
}

TEST_CASE("factored rendering") {
    Vars v;
    RationalFunction f = (v.p * v.p) / (v.q + 1);
    CHECK(f.to_factored_string() == "((p)^2)/((q + 1)^1)");
}

TEST_CASE("field identities at random points") {
    Vars v;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-4, 4), d(1, 7);
    auto random_rf = [&] {
        RationalFunction num = RationalFunction(c(rng)) * v.p + RationalFunction(c(rng)) * v.q * v.p + c(rng);
        RationalFunction den = RationalFunction(c(rng)) * v.q + RationalFunction(d(rng)) * v.p * v.p + d(rng);
        if (den.is_zero()) den = RationalFunction(1);
        return num / den;
    };
    for (int i = 0; i < 150; ++i) {
        RationalFunction a = random_rf(), b = random_rf(), e = random_rf();
        Assignment u{{v.pv, Rational(d(rng), 11)}, {v.qv, Rational(c(rng), 13)}};
        try {
            Rational av = a.evaluate(u), bv = b.evaluate(u), ev = e.evaluate(u);
            CHECK((a + b).evaluate(u) == av + bv);
            CHECK((a * b).evaluate(u) == av * bv);
            CHECK((a - b).evaluate(u) == av - bv);
            if (!b.is_zero() && bv != 0) CHECK((a / b).evaluate(u) == av / bv);
            CHECK((a + b) * e == a * e + b * e);
        } catch (const EvalDenominatorZero&) {
        }
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
    }
}
