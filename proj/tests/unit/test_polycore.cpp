#include <doctest.h>

#include <random>

#include "parmreach/errors.hpp"
#include "parmreach/polynomial.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

struct Vars {
    ScopedSession session;
    Variable xv = session.get().variables().intern("x");
    Variable yv = session.get().variables().intern("y");
    Variable zv = session.get().variables().intern("z");
    Polynomial x = Polynomial::variable(xv);
    Polynomial y = Polynomial::variable(yv);
    Polynomial z = Polynomial::variable(zv);
};

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Polynomial>& vars, int terms, int max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_deg), pick(0, static_cast<int>(vars.size()) - 1);
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        Polynomial t(coeff(rng));
        int d = deg(rng);
        for (int j = 0; j < d; ++j) t *= vars[pick(rng)];
        p += t;
    }
    return p;
}

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("rationals parse exactly") {
    CHECK(parse_rational("0.4") == (Rational(2) / 5));
    CHECK(parse_rational("-1/2") == (Rational(-1) / 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("0.25") == (Rational(1) / 4));
    CHECK(to_string((Rational(6) / 4)) == "3/2");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("polynomial arithmetic normalizes") {
    Vars v;
    Polynomial p = (v.x + 1) * (v.x - 1);
    CHECK(p == v.x * v.x - 1);
    CHECK((v.x - v.x).is_zero());
    CHECK((v.x * 0).is_zero());
    CHECK(Polynomial(3).is_constant());
    CHECK(Polynomial(1).is_one());
    CHECK((v.x + v.y).pow(2) == v.x * v.x + v.x * v.y * 2 + v.y * v.y);
    CHECK(((v.x * v.y + v.z) * v.z).total_degree() == 3);
    CHECK((v.x * v.x * v.y).degree(v.xv) == 2);
    CHECK((v.x * v.x * v.y).degree(v.zv) == 0);
    CHECK((v.x + v.z).main_variable() == v.zv);
}

TEST_CASE("polynomial rendering uses session names") {
    Vars v;
    CHECK((v.x * 3 - 10).to_string() == "3*x - 10");
    CHECK(Polynomial().to_string() == "0");
    CHECK((-v.y).to_string() == "-y");
    CHECK((v.x * v.x).to_string() == "x^2");
}

TEST_CASE("evaluation") {
    Vars v;
    Polynomial p = v.x * v.y * 2 - v.z + 5;
    Assignment u{{v.xv, (Rational(1) / 2)}, {v.yv, Rational(3)}, {v.zv, Rational(-1)}};
    CHECK(p.evaluate(u) == Rational(9));
    Assignment partial{{v.xv, Rational(1)}};
    CHECK_THROWS_AS(p.evaluate(partial), MissingAssignment);
    CHECK(Polynomial(7).evaluate({}) == 7);
}

TEST_CASE("exact division") {
    Vars v;
    Polynomial a = (v.x + v.y) * (v.x - v.z * 2);
    CHECK(divide_exact(a, v.x + v.y) == v.x - v.z * 2);
    CHECK_THROWS_AS(divide_exact(a, v.x + 1), NotDivisible);
    CHECK_THROWS_AS(divide_exact(a, Polynomial()), DivisionByZeroFunction);
    CHECK(!try_divide_exact(v.x * v.x + 1, v.x + 1).has_value());
    CHECK(divide_exact(a * 6, Polynomial(3)) == a * 2);
}

TEST_CASE("content and primitive part") {
    Vars v;
    auto [c, p] = split_content(v.x * -6 + 4);
    CHECK(c == -2);
    CHECK(p == v.x * 3 - 2);
    CHECK(integer_content(v.x * 6 + v.y * 9) == 3);
    auto [c2, p2] = split_content(Polynomial(-5));
    CHECK(c2 == -5);
    CHECK(p2.is_one());
}

TEST_CASE("gcd examples") {
    Vars v;
    CHECK(gcd(v.x * v.x - 1, v.x * v.x + v.x * 2 + 1) == v.x + 1);
    CHECK(gcd(v.x * v.y * v.z, v.x * v.y) == v.x * v.y);
    CHECK(gcd(v.x + 1, v.y + 1).is_one());
    CHECK(gcd(Polynomial(6), Polynomial(4)) == 2);
    CHECK(gcd(Polynomial(), v.x * 2) == v.x * 2);
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(v.x * 4 + 4, v.x * 6 + 6) == (v.x + 1) * 2);
}

TEST_CASE("gcd recovers a planted common factor") {
    Vars v;
    std::mt19937_64 rng(7);
    std::vector<Polynomial> vars{v.x, v.y, v.z};
    for (int i = 0; i < 150; ++i) {
        Polynomial c = random_poly(rng, vars, 3, 2);
        if (c.is_zero()) continue;
        // distinct linear factors in different variables are coprime
        Polynomial a = (v.x + i + 1) * (v.y - 2);
        Polynomial b = (v.x + i + 2) * (v.z + 3);
        Polynomial g = gcd(a * c, b * c);
        CHECK(same_up_to_sign(g, c));
    }
}

TEST_CASE("gcd divides both operands and leaves coprime cofactors") {
    Vars v;
    std::mt19937_64 rng(11);
    std::vector<Polynomial> vars{v.x, v.y, v.z};
    std::uniform_int_distribution<int> pt(-7, 7);
    for (int i = 0; i < 150; ++i) {
        Polynomial common = random_poly(rng, vars, 2, 2);
        Polynomial a = random_poly(rng, vars, 3, 2) * common;
        Polynomial b = random_poly(rng, vars, 3, 2) * common;
        if (a.is_zero() || b.is_zero()) continue;
        Polynomial g = gcd(a, b);
        REQUIRE(!g.is_zero());
        auto qa = try_divide_exact(a, g);
        auto qb = try_divide_exact(b, g);
        REQUIRE(qa.has_value());
        REQUIRE(qb.has_value());
        CHECK(try_divide_exact(g, split_content(common).second).has_value());
        CHECK(gcd(*qa, *qb).is_constant());
        CHECK(g.leading_coefficient() > 0);
        // numeric consistency of the quotient
        Assignment u{{v.xv, Rational(pt(rng))}, {v.yv, Rational(pt(rng))}, {v.zv, Rational(pt(rng))}};
        CHECK(qa->evaluate(u) * g.evaluate(u) == a.evaluate(u));
    }
}

TEST_CASE("ring identities hold at random points") {
    Vars v;
    std::mt19937_64 rng(3);
    std::vector<Polynomial> vars{v.x, v.y, v.z};
    std::uniform_int_distribution<int> pt(-9, 9);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(rng, vars, 4, 3);
        Polynomial b = random_poly(rng, vars, 4, 3);
        Assignment u{{v.xv, Rational(pt(rng), 3)}, {v.yv, Rational(pt(rng))}, {v.zv, Rational(pt(rng), 2)}};
        CHECK((a + b).evaluate(u) == a.evaluate(u) + b.evaluate(u));
        CHECK((a * b).evaluate(u) == a.evaluate(u) * b.evaluate(u));
        CHECK((a - a).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("irreducibility heuristic is sound on linear polynomials") {
    Vars v;
    CHECK(is_irreducible_heuristic(v.x + v.y * 2 + 1) == Irreducibility::Irreducible);
    CHECK(is_irreducible_heuristic(Polynomial(5)) == Irreducibility::Irreducible);
    CHECK(is_irreducible_heuristic(v.x * 2 + 4) == Irreducibility::Unknown);
    CHECK(is_irreducible_heuristic(v.x * v.x - 1) == Irreducibility::Unknown);
}

TEST_CASE("monomial order is reverse lexicographic") {
    Vars v;
    Monomial xm = Monomial::of(v.xv), ym = Monomial::of(v.yv);
    CHECK(ym > xm);
    CHECK(Monomial::of(v.xv, 2) > xm);
    CHECK(xm * ym == Monomial::from_powers({{v.xv.id, 1}, {v.yv.id, 1}}));
    CHECK(Monomial::gcd(Monomial::of(v.xv, 3) * ym, Monomial::of(v.xv, 2)) == Monomial::of(v.xv, 2));
    CHECK(xm.divides(xm * ym));
    CHECK(!ym.divides(xm));
}
