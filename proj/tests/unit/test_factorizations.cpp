#include <doctest.h>

#include <random>

#include "parmreach/errors.hpp"
#include "parmreach/factorization.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

struct Vars {
    ScopedSession session;
    Polynomial x = Polynomial::variable(session.get().variables().intern("x"));
    Polynomial y = Polynomial::variable(session.get().variables().intern("y"));
    Polynomial z = Polynomial::variable(session.get().variables().intern("z"));
};

Factorization F(std::initializer_list<Factorization::RawFactor> raw) { return Factorization::from_factors(raw); }

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("gcd of {(xyz)^1} and {x^1, y^1} refines xyz") {
    Vars v;
    Factorization f1 = F({{v.x * v.y * v.z, 1}});
    Factorization f2 = F({{v.x, 1}, {v.y, 1}});
    GcdTriple t = gcd_factored(f1, f2);
    CHECK(t.cofactor_left == F({{v.z, 1}}));
    CHECK(t.cofactor_right == Factorization::one());
    CHECK(t.common == F({{v.x, 1}, {v.y, 1}}));
    CHECK(refine_left(t) == F({{v.x, 1}, {v.y, 1}, {v.z, 1}}));
    CHECK(refined(f1) == F({{v.x, 1}, {v.y, 1}, {v.z, 1}}));
}

TEST_CASE("reduce merges bases and pulls out content") {
    Vars v;
    Factorization f = F({{v.x * 2 + 2, 1}, {v.x + 1, 2}, {Polynomial(1), 3}});
    CHECK(f.constant_factor() == 2);
    CHECK(f.bases().size() == 1);
    CHECK(f.expand() == (v.x + 1).pow(3) * 2);
    CHECK(F({}).is_one());
    CHECK(Factorization::one().factors().size() == 1);
    CHECK(Factorization::zero().factors().empty());
    CHECK(Factorization::of(Polynomial()).is_zero());
    CHECK(F({{-v.x, 1}}).constant_factor() == -1);
}

TEST_CASE("fcm, fcd, fmul and fdiv on shared bases") {
    Vars v;
    Factorization a = F({{v.x, 2}, {v.y, 1}});
    Factorization b = F({{v.x, 1}, {v.z, 3}});
    CHECK(fcd(a, b) == F({{v.x, 1}}));
    CHECK(fcm(a, b) == F({{v.x, 2}, {v.y, 1}, {v.z, 3}}));
    CHECK(fmul(a, b) == F({{v.x, 3}, {v.y, 1}, {v.z, 3}}));
    CHECK(fdiv(a, F({{v.x, 1}})) == F({{v.x, 1}, {v.y, 1}}));
    CHECK(fdiv(fmul(a, b), b, true) == a);
    CHECK_THROWS_AS(fdiv(F({{v.x * v.y, 1}}), F({{v.x, 1}}), true), InsufficientRefinement);
    CHECK(fcd(Factorization::constant(6), Factorization::constant(4)) == Factorization::constant(2));
    CHECK(fcm(Factorization::constant(6), Factorization::constant(4)) == Factorization::constant(12));
}

TEST_CASE("fadd keeps the common part factored") {
    Vars v;
    Factorization a = F({{v.x, 1}, {v.y, 1}});
    Factorization b = F({{v.x, 1}, {v.z, 1}});
    Factorization s = fadd(a, b);
    CHECK(s.expand() == v.x * (v.y + v.z));
    CHECK(s.exponent(current_session().pool().intern(v.x)) == 1);
    CHECK(fadd(a, Factorization::zero()) == a);
    CHECK(fadd(a, F({{-v.x * v.y, 1}})).is_zero());
}

TEST_CASE("to_string renders products of bases") {
    Vars v;
    CHECK(F({{v.x, 2}, {Polynomial(3), 1}}).to_string() == "3*(x)^2");
    CHECK(Factorization::one().to_string() == "1");
    CHECK(Factorization::zero().to_string() == "0");
}

TEST_CASE("gcd_factored on coprime and equal operands") {
    Vars v;
    Factorization a = F({{v.x + 1, 1}});
    Factorization b = F({{v.y + 1, 2}});
    GcdTriple t = gcd_factored(a, b);
    CHECK(t.common.is_one());
    CHECK(t.cofactor_left == a);
    CHECK(t.cofactor_right == b);

    GcdTriple same = gcd_factored(b, b);
    CHECK(same.common == b);
    CHECK(same.cofactor_left.is_one());
    CHECK(same.cofactor_right.is_one());
}

TEST_CASE("gcd_factored splits overlapping bases") {
    Vars v;
    Polynomial a = v.x + v.y, b = v.x - v.z, c = v.y * v.z + 1;
    Factorization f1 = F({{a * b, 2}, {c, 1}});
    Factorization f2 = F({{b * c, 1}, {a, 1}});
    GcdTriple t = gcd_factored(f1, f2);
    CHECK(fmul(t.common, t.cofactor_left).expand() == f1.expand());
    CHECK(fmul(t.common, t.cofactor_right).expand() == f2.expand());
    CHECK(same_up_to_sign(t.common.expand(), a * b * c));
}

TEST_CASE("weighted degree of the pending set strictly decreases") {
    Vars v;
    Polynomial a = v.x + v.y, b = v.x - v.z, c = v.y * v.z + 1;
    Factorization f1 = F({{a * b * c, 1}, {a, 2}});
    Factorization f2 = F({{b, 1}, {a * c, 1}});
    std::vector<std::uint64_t> trace;
    gcd_factored(f1, f2, [&](std::uint64_t d) { trace.push_back(d); });
    REQUIRE(!trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] < trace[i - 1]);
}

TEST_CASE("gcd_factored post-conditions on random factorizations") {
    Vars v;
    std::mt19937_64 rng(42);
    std::vector<Polynomial> atoms{v.x + 1, v.y - 2, v.x + v.z, v.x * v.y + 3, v.z * v.z + v.y, v.x - v.y + v.z};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(atoms.size()) - 1), exp(0, 2), group(1, 3);
    auto random_factorization = [&] {
        std::vector<Factorization::RawFactor> raw;
        int bases = group(rng);
        for (int i = 0; i < bases; ++i) {
            Polynomial base = atoms[pick(rng)];
            if (exp(rng) > 0) base *= atoms[pick(rng)];
            raw.emplace_back(base, 1 + exp(rng));
        }
        return Factorization::from_factors(raw);
    };
    for (int i = 0; i < 200; ++i) {
        Factorization f1 = random_factorization();
        Factorization f2 = random_factorization();
        GcdTriple t = gcd_factored(f1, f2);
        CHECK(fmul(t.common, t.cofactor_left).expand() == f1.expand());
        CHECK(fmul(t.common, t.cofactor_right).expand() == f2.expand());
        CHECK(gcd(t.cofactor_left.expand(), t.cofactor_right.expand()).is_constant());
        CHECK(same_up_to_sign(t.common.expand(), gcd(f1.expand(), f2.expand())));
    }
}
