// Multivariate gcd over Z[V] by recursive subresultant remainder sequences:
// the polynomial is viewed as univariate in its highest variable with
// coefficients in the remaining variables. A modular image test detects the
// common coprime case early.

#include <algorithm>
#include <random>
#include <unordered_map>

#include "parmreach/polynomial.hpp"

namespace parmreach {
namespace {

using Coeffs = std::vector<Polynomial>;  // index = degree in the main variable

Coeffs to_univariate(const Polynomial& g, Variable v) {
    Coeffs out(g.degree(v) + 1);
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : g.terms()) {
        std::uint32_t d = t.mono.degree(v);
        buckets[d].push_back(Term{t.coeff, t.mono / Monomial::of(v, d)});
    }
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = Polynomial::from_terms(std::move(buckets[d]));
    return out;
}

Polynomial from_univariate(const Coeffs& c, Variable v) {
    std::vector<Term> terms;
    for (std::size_t d = 0; d < c.size(); ++d)
        for (const auto& t : c[d].terms())
            terms.push_back(Term{t.coeff, t.mono * Monomial::of(v, static_cast<std::uint32_t>(d))});
    return Polynomial::from_terms(std::move(terms));
}

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Polynomial canonical_sign(Polynomial g) {
    if (!g.is_zero() && g.leading_coefficient() < 0) return -g;
    return g;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_of(const Coeffs& c) {
    Polynomial g;
    for (const auto& x : c) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? canonical_sign(x) : gcd_rec(g, x);
        if (g.is_one()) break;
    }
    return g;
}

Coeffs divide_all(const Coeffs& c, const Polynomial& d) {
    if (d.is_one()) return c;
    Coeffs out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(divide_exact(x, d));
    return out;
}

// Pseudo-remainder of a by b, both univariate with deg a >= deg b.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const std::size_t n = b.size() - 1;
    const Polynomial& lcb = b.back();
    std::size_t steps = a.size() - n;
    while (!a.empty() && a.size() - 1 >= n) {
        Polynomial lca = a.back();
        std::size_t shift = a.size() - 1 - n;
        for (auto& x : a) x *= lcb;
        for (std::size_t i = 0; i <= n; ++i) a[i + shift] -= lca * b[i];
        trim(a);
        --steps;
    }
    if (steps > 0 && !a.empty()) {
        Polynomial scale = lcb.pow(static_cast<std::uint32_t>(steps));
        for (auto& x : a) x *= scale;
    }
    return a;
}

constexpr std::uint64_t kPrime = 4294967291ULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t pow_mod(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, base = mul_mod(base, base))
        if (e & 1) r = mul_mod(r, base);
    return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, static_cast<std::uint32_t>(kPrime - 2)); }

using Image = std::vector<std::uint64_t>;

Image image(const Polynomial& g, Variable v, std::unordered_map<std::uint32_t, std::uint64_t>& point,
            std::mt19937_64& rng) {
    Image out(g.degree(v) + 1, 0);
    for (const auto& t : g.terms()) {
        std::uint64_t x = mpz_fdiv_ui(t.coeff.get_mpz_t(), static_cast<unsigned long>(kPrime));
        std::uint32_t d = 0;
        for (const auto& [var, e] : t.mono.powers()) {
            if (var == v.id) {
                d = e;
                continue;
            }
            auto it = point.find(var);
            if (it == point.end()) it = point.emplace(var, 1 + rng() % (kPrime - 1)).first;
            x = mul_mod(x, pow_mod(it->second, e));
        }
        out[d] = (out[d] + x) % kPrime;
    }
    return out;
}

void trim(Image& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t gcd_degree(Image a, Image b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        std::uint64_t inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t f = mul_mod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + kPrime - mul_mod(f, b[i])) % kPrime;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

// True only if gcd(a, b) has degree 0 in v. An image whose leading
// coefficients survive bounds the degree of the true gcd from above.
bool coprime_in(const Polynomial& a, const Polynomial& b, Variable v) {
    thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::unordered_map<std::uint32_t, std::uint64_t> point;
        Image ia = image(a, v, point, rng);
        Image ib = image(b, v, point, rng);
        if (ia.back() == 0 || ib.back() == 0) continue;
        return gcd_degree(std::move(ia), std::move(ib)) == 0;
    }
    return false;
}

// gcd of a polynomial with a single term: the monomial gcd over all terms
// times the integer content gcd.
Polynomial gcd_with_monomial(const Term& m, const Polynomial& p) {
    Monomial mono = m.mono;
    Integer c = abs(m.coeff);
    for (const auto& t : p.terms()) {
        mono = Monomial::gcd(mono, t.mono);
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
    }
    return Polynomial::monomial(c, mono);
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return canonical_sign(b);
    if (b.is_zero()) return canonical_sign(a);
    if (a.is_constant() || b.is_constant()) {
        Integer c;
        mpz_gcd(c.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
        return Polynomial(c);
    }
    if (a == b) return canonical_sign(a);
    if (a.terms().size() == 1) return gcd_with_monomial(a.terms()[0], b);
    if (b.terms().size() == 1) return gcd_with_monomial(b.terms()[0], a);

    Variable v = std::max(*a.main_variable(), *b.main_variable());
    if (a.degree(v) == 0) return gcd_rec(a, content_of(to_univariate(b, v)));
    if (b.degree(v) == 0) return gcd_rec(content_of(to_univariate(a, v)), b);

    Coeffs ua = to_univariate(a, v);
    Coeffs ub = to_univariate(b, v);
    Polynomial ca = content_of(ua);
    Polynomial cb = content_of(ub);
    Polynomial c = gcd_rec(ca, cb);
    if (coprime_in(a, b, v)) return c;
    ua = divide_all(ua, ca);
    ub = divide_all(ub, cb);
    if (ua.size() < ub.size()) std::swap(ua, ub);

    Polynomial g(1), h(1);
    while (true) {
        const std::size_t delta = ua.size() - ub.size();
        Coeffs r = pseudo_remainder(ua, ub);
        if (r.empty()) break;
        if (r.size() == 1) return c;
        ua = std::move(ub);
        ub = divide_all(r, g * h.pow(static_cast<std::uint32_t>(delta)));
        g = ua.back();
        if (delta > 0) h = divide_exact(g.pow(static_cast<std::uint32_t>(delta)), h.pow(static_cast<std::uint32_t>(delta - 1)));
    }
    ub = divide_all(ub, content_of(ub));
    return canonical_sign(c * from_univariate(ub, v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (!a.is_zero() && !b.is_zero()) {
        // cheap divisibility checks catch the frequent "one divides the other" case
        if (a.terms().size() <= b.terms().size()) {
            if (auto q = try_divide_exact(b, a)) return canonical_sign(a);
        } else if (auto q = try_divide_exact(a, b)) {
            return canonical_sign(b);
        }
    }
    return gcd_rec(a, b);
}

}  // namespace parmreach
