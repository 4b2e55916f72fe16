#include "parmreach/factorization.hpp"

#include <algorithm>

#include "parmreach/errors.hpp"
#include "parmreach/session.hpp"

namespace parmreach {
namespace {

PolyPool& pool() { return current_session().pool(); }

Integer power(const Integer& base, std::uint32_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

Factorization Factorization::zero() {
    Factorization f;
    f.constant_ = 0;
    return f;
}

Factorization Factorization::constant(Integer c) {
    Factorization f;
    f.constant_ = std::move(c);
    return f;
}

Factorization Factorization::of(const Polynomial& g) {
    if (g.is_zero()) return zero();
    auto [c, prim] = split_content(g);
    Factorization f = constant(std::move(c));
    if (!prim.is_constant()) f.bases_.emplace(pool().intern(prim), 1);
    return f;
}

Factorization Factorization::from_factors(const std::vector<RawFactor>& raw) { return reduce(raw); }

std::uint32_t Factorization::exponent(PolyHandle base) const {
    auto it = bases_.find(base);
    return it == bases_.end() ? 0 : it->second;
}

void Factorization::multiply_base(PolyHandle base, std::uint32_t exponent) {
    if (exponent == 0 || base.poly().is_one()) return;
    bases_[base] += exponent;
}

void Factorization::multiply_constant(const Integer& c) {
    constant_ *= c;
    if (constant_ == 0) bases_.clear();
}

std::vector<Factorization::RawFactor> Factorization::factors() const {
    std::vector<RawFactor> out;
    if (is_zero()) return out;
    if (constant_ != 1 || bases_.empty()) out.emplace_back(Polynomial(constant_), 1);
    for (const auto& [h, e] : bases_) out.emplace_back(h.poly(), e);
    return out;
}

Polynomial Factorization::expand() const {
    Polynomial p(constant_);
    for (const auto& [h, e] : bases_) p *= h.poly().pow(e);
    return p;
}

Rational Factorization::evaluate(const Assignment& u) const {
    Rational v(constant_);
    for (const auto& [h, e] : bases_) {
        Rational b = h.poly().evaluate(u);
        for (std::uint32_t i = 0; i < e; ++i) v *= b;
    }
    return v;
}

std::uint64_t Factorization::weighted_degree() const {
    std::uint64_t d = 0;
    for (const auto& [h, e] : bases_) d += static_cast<std::uint64_t>(e) * h.poly().total_degree();
    return d;
}

std::string Factorization::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (constant_ != 1 || bases_.empty()) out = constant_.get_str();
    for (const auto& [h, e] : bases_) {
        if (!out.empty()) out += "*";
        out += "(" + h.poly().to_string() + ")^" + std::to_string(e);
    }
    return out;
}

Factorization reduce(const std::vector<Factorization::RawFactor>& raw) {
    Factorization f;
    for (const auto& [g, e] : raw) {
        if (e == 0) continue;
        if (g.is_zero()) return Factorization::zero();
        auto [c, prim] = split_content(g);
        f.multiply_constant(power(c, e));
        if (!prim.is_constant()) f.multiply_base(pool().intern(prim), e);
    }
    return f;
}

Factorization fmul(const Factorization& f1, const Factorization& f2) {
    if (f1.is_zero() || f2.is_zero()) return Factorization::zero();
    Factorization r = f1;
    r.multiply_constant(f2.constant_factor());
    for (const auto& [h, e] : f2.bases()) r.multiply_base(h, e);
    return r;
}

Factorization fdiv(const Factorization& f1, const Factorization& f2, bool verify) {
    if (f2.is_zero()) throw DivisionByZeroFunction("factorization division by F(0)");
    if (f1.is_zero()) return Factorization::zero();
    const Integer& c1 = f1.constant_factor();
    const Integer& c2 = f2.constant_factor();
    if (!mpz_divisible_p(c1.get_mpz_t(), c2.get_mpz_t()))
        throw InsufficientRefinement("constant " + c2.get_str() + " does not divide " + c1.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    Factorization r = Factorization::constant(q);
    for (const auto& [h, e] : f1.bases()) {
        std::uint32_t sub = f2.exponent(h);
        if (e > sub) r.multiply_base(h, e - sub);
    }
    if (verify && !(r.expand() * f2.expand() == f1.expand()))
        throw InsufficientRefinement(f2.to_string() + " is not a refined divisor of " + f1.to_string());
    return r;
}

Factorization fcd(const Factorization& f1, const Factorization& f2) {
    Integer c;
    mpz_gcd(c.get_mpz_t(), f1.constant_factor().get_mpz_t(), f2.constant_factor().get_mpz_t());
    Factorization r = Factorization::constant(c);
    const auto& small = f1.bases().size() <= f2.bases().size() ? f1 : f2;
    const auto& large = &small == &f1 ? f2 : f1;
    for (const auto& [h, e] : small.bases())
        if (std::uint32_t other = large.exponent(h)) r.multiply_base(h, std::min(e, other));
    return r;
}

Factorization fcm(const Factorization& f1, const Factorization& f2) {
    Integer c;
    mpz_lcm(c.get_mpz_t(), f1.constant_factor().get_mpz_t(), f2.constant_factor().get_mpz_t());
    Factorization r = Factorization::constant(c);
    for (const auto& [h, e] : f1.bases()) r.multiply_base(h, std::max(e, f2.exponent(h)));
    for (const auto& [h, e] : f2.bases())
        if (f1.exponent(h) == 0) r.multiply_base(h, e);
    return r;
}

Factorization fadd(const Factorization& f1, const Factorization& f2) {
    if (f1.is_zero()) return f2;
    if (f2.is_zero()) return f1;
    Factorization d = fcd(f1, f2);
    Polynomial sum = fdiv(f1, d).expand() + fdiv(f2, d).expand();
    if (sum.is_zero()) return Factorization::zero();
    return fmul(d, Factorization::of(sum));
}

Factorization refined(const Factorization& f) {
    if (f.is_zero()) return f;
    Factorization out = Factorization::constant(f.constant_factor());
    std::vector<std::pair<PolyHandle, std::uint32_t>> work(f.bases().begin(), f.bases().end());
    while (!work.empty()) {
        auto [h, e] = work.back();
        work.pop_back();
        if (auto parts = pool().known_split(h)) {
            for (const auto& [part, k] : *parts) work.emplace_back(part, k * e);
        } else {
            out.multiply_base(h, e);
        }
    }
    return out;
}

GcdTriple gcd_factored(const Factorization& f1, const Factorization& f2, const GcdTraceHook& hook) {
    if (f1.is_zero() || f2.is_zero()) throw DivisionByZeroFunction("gcd_factored on F(0)");
    PolyPool& p = pool();
    const Factorization a = refined(f1);
    const Factorization b = refined(f2);

    Factorization common = fcd(a, b);
    Factorization pending1 = fdiv(a, common);  // F1
    Factorization pending2 = fdiv(b, common);  // F2
    Factorization done1 = Factorization::constant(pending1.constant_factor());  // F1'
    Factorization done2;                                                       // F2'
    pending1.set_constant(1);

    using Parts = std::vector<std::pair<PolyHandle, std::uint32_t>>;

    while (!pending1.bases().empty()) {
        if (hook) hook(pending1.weighted_degree());
        auto first = pending1.bases().begin();
        PolyHandle r1 = first->first;
        const std::uint32_t e1 = first->second;
        pending1.remove_base(r1);
        const PolyHandle r1_original = r1;
        Parts r1_parts;

        while (!r1.poly().is_one() && !pending2.bases().empty()) {
            auto second = pending2.bases().begin();
            const PolyHandle r2 = second->first;
            const std::uint32_t e2 = second->second;
            pending2.remove_base(r2);

            PolyHandle g;
            if (r1 == r2)
                g = r1;
            else if (!r1.irreducible() || !r2.irreducible())
                g = p.gcd(r1, r2);
            else
                g = p.one();

            if (g.poly().is_one()) {
                done2.multiply_base(r2, e2);
                continue;
            }
            r1 = p.intern(divide_exact(r1.poly(), g.poly()));
            r1_parts.emplace_back(g, 1);
            const std::uint32_t m = std::min(e1, e2);
            pending1.multiply_base(g, e1 - m);
            pending2.multiply_base(g, e2 - m);
            PolyHandle r2_rest = p.intern(divide_exact(r2.poly(), g.poly()));
            done2.multiply_base(r2_rest, e2);
            common.multiply_base(g, m);
            if (!r2_rest.poly().is_one()) p.record_split(r2, Parts{{g, 1}, {r2_rest, 1}});
        }
        done1.multiply_base(r1, e1);
        if (!r1_parts.empty() && !(r1_parts.size() == 1 && r1.poly().is_one())) {
            if (!r1.poly().is_one()) r1_parts.emplace_back(r1, 1);
            p.record_split(r1_original, std::move(r1_parts));
        }
        pending2 = fmul(pending2, done2);
        done2 = Factorization::one();
    }
    // F2 carries the cofactor constant of g2
    return GcdTriple{std::move(done1), std::move(pending2), std::move(common)};
}

}  // namespace parmreach
