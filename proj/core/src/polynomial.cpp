#include "parmreach/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parmreach/errors.hpp"
#include "parmreach/session.hpp"

namespace parmreach {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("not a rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        auto digits = [](const std::string& d) {
            return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
        };
        if (!digits(num) || !digits(den)) throw bad();
        Integer n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        value = Rational(n, d);
    } else {
        auto dot = body.find('.');
        std::string whole = body.substr(0, dot);
        std::string frac = dot == std::string::npos ? std::string() : body.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw bad();
        for (char c : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer n(whole.empty() ? std::string("0") : whole);
        n = n * scale + (frac.empty() ? Integer(0) : Integer(frac));
        value = Rational(n, scale);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
    mpf_class f(r, 256);
    std::ostringstream os;
    os.precision(digits);
    os << f;
    return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Variable v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.powers_.emplace_back(v.id, exponent);
    return m;
}

Monomial Monomial::from_powers(std::vector<Power> powers) {
    std::sort(powers.begin(), powers.end());
    Monomial m;
    for (const auto& [var, e] : powers) {
        if (e == 0) continue;
        if (!m.powers_.empty() && m.powers_.back().first == var)
            m.powers_.back().second += e;
        else
            m.powers_.emplace_back(var, e);
    }
    return m;
}

std::uint32_t Monomial::degree(Variable v) const noexcept {
    for (const auto& [var, e] : powers_)
        if (var == v.id) return e;
    return 0;
}

std::uint32_t Monomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    auto it = other.powers_.begin();
    for (const auto& [var, e] : powers_) {
        while (it != other.powers_.end() && it->first < var) ++it;
        if (it == other.powers_.end() || it->first != var || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial m;
    auto it = divisor.powers_.begin();
    for (const auto& [var, e] : powers_) {
        while (it != divisor.powers_.end() && it->first < var) ++it;
        std::uint32_t sub = (it != divisor.powers_.end() && it->first == var) ? it->second : 0;
        if (e > sub) m.powers_.emplace_back(var, e - sub);
    }
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m;
    m.powers_.reserve(powers_.size() + other.powers_.size());
    auto a = powers_.begin();
    auto b = other.powers_.begin();
    while (a != powers_.end() || b != other.powers_.end()) {
        if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
            m.powers_.push_back(*a++);
        } else if (a == powers_.end() || b->first < a->first) {
            m.powers_.push_back(*b++);
        } else {
            m.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto it = b.powers_.begin();
    for (const auto& [var, e] : a.powers_) {
        while (it != b.powers_.end() && it->first < var) ++it;
        if (it != b.powers_.end() && it->first == var) m.powers_.emplace_back(var, std::min(e, it->second));
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    auto ia = a.powers_.rbegin();
    auto ib = b.powers_.rbegin();
    while (ia != a.powers_.rend() && ib != b.powers_.rend()) {
        if (ia->first != ib->first) {
            // the one carrying the higher variable has a positive exponent there
            return ia->first > ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (ia->second != ib->second) return ia->second <=> ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.powers_.rend()) return std::strong_ordering::greater;
    if (ib != b.powers_.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [var, e] : powers_) {
        h ^= (static_cast<std::size_t>(var) << 32) ^ e;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Integer constant) {
    if (constant != 0) terms_.push_back(Term{std::move(constant), Monomial{}});
}

Polynomial Polynomial::variable(Variable v) {
    Polynomial p;
    p.terms_.push_back(Term{Integer(1), Monomial::of(v)});
    return p;
}

Polynomial Polynomial::monomial(Integer coeff, Monomial mono) {
    Polynomial p;
    if (coeff != 0) p.terms_.push_back(Term{std::move(coeff), std::move(mono)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Integer Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return last.mono.is_one() ? last.coeff : Integer(0);
}

std::uint32_t Polynomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::uint32_t Polynomial::degree(Variable v) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
    return d;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> vars;
    for (const auto& t : terms_)
        for (const auto& p : t.mono.powers()) vars.push_back(Variable{p.first});
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::optional<Variable> Polynomial::main_variable() const {
    std::optional<Variable> best;
    for (const auto& t : terms_)
        if (!t.mono.is_one()) {
            Variable v{t.mono.powers().back().first};
            if (!best || *best < v) best = v;
        }
    return best;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

// Merge of two descending term lists; `sign` is applied to the right side.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->mono > ib->mono)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->mono > ia->mono) {
            out.push_back(Term{sign > 0 ? ib->coeff : Integer(-ib->coeff), ib->mono});
            ++ib;
        } else {
            Integer c = sign > 0 ? Integer(ia->coeff + ib->coeff) : Integer(ia->coeff - ib->coeff);
            if (c != 0) out.push_back(Term{std::move(c), ia->mono});
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.is_zero()) return *this;
    terms_ = merge_terms(terms_, other.terms_, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.is_zero()) return *this;
    terms_ = merge_terms(terms_, other.terms_, -1);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) products.push_back(Term{x.coeff * y.coeff, x.mono * y.mono});
    return Polynomial::from_terms(std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Integer& factor) const {
    if (factor == 0) return Polynomial{};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= factor;
    return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
    return true;
}

Rational Polynomial::evaluate(const Assignment& u) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational prod = Rational(t.coeff);
        for (const auto& [var, e] : t.mono.powers()) {
            auto it = u.find(Variable{var});
            if (it == u.end())
                throw MissingAssignment("no value assigned to parameter '" +
                                        current_session().variables().name(Variable{var}) + "'");
            Rational pw = 1;
            for (std::uint32_t i = 0; i < e; ++i) pw *= it->second;
            prod *= pw;
        }
        sum += prod;
    }
    sum.canonicalize();
    return sum;
}

std::size_t Polynomial::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        std::size_t ch = mpz_size(t.coeff.get_mpz_t()) == 0 ? 0 : mpz_getlimbn(t.coeff.get_mpz_t(), 0);
        ch ^= static_cast<std::size_t>(mpz_sgn(t.coeff.get_mpz_t()) + 1) << 1;
        h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= ch + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const auto& vars = current_session().variables();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Integer c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        bool wrote = false;
        if (c != 1 || t.mono.is_one()) {
            out += c.get_str();
            wrote = true;
        }
        for (const auto& [var, e] : t.mono.powers()) {
            if (wrote) out += "*";
            out += vars.name(Variable{var});
            if (e != 1) out += "^" + std::to_string(e);
            wrote = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
    if (a.is_zero()) return Polynomial{};
    if (b.is_constant()) {
        const Integer& c = b.terms()[0].coeff;
        std::vector<Term> q;
        q.reserve(a.terms().size());
        for (const auto& t : a.terms()) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
            Integer qc;
            mpz_divexact(qc.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
            q.push_back(Term{std::move(qc), t.mono});
        }
        return Polynomial::from_terms(std::move(q));
    }
    if (a == b) return Polynomial(1);
    if (a.total_degree() < b.total_degree()) return std::nullopt;
    // every variable of b must occur in a with at least b's degree
    for (Variable v : b.variables())
        if (a.degree(v) < b.degree(v)) return std::nullopt;

    auto greater = [](const Monomial& x, const Monomial& y) { return x > y; };
    std::map<Monomial, Integer, decltype(greater)> rem(greater);
    for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);

    const Term& lead = b.leading_term();
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.mono.divides(it->first)) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
        Monomial qm = it->first / lead.mono;
        for (const auto& t : b.terms()) {
            Monomial m = t.mono * qm;
            auto [pos, inserted] = rem.try_emplace(std::move(m));
            pos->second -= qc * t.coeff;
            if (pos->second == 0) rem.erase(pos);
        }
        quotient.push_back(Term{std::move(qc), std::move(qm)});
    }
    return Polynomial::from_terms(std::move(quotient));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide_exact(a, b);
    if (!q) throw NotDivisible("(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
    return std::move(*q);
}

Integer integer_content(const Polynomial& g) {
    Integer c = 0;
    for (const auto& t : g.terms()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

std::pair<Integer, Polynomial> split_content(const Polynomial& g) {
    if (g.is_constant()) return {g.constant_value(), Polynomial(1)};
    Integer c = integer_content(g);
    if (g.leading_coefficient() < 0) c = -c;
    if (c == 1) return {c, g};
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
        terms.push_back(Term{std::move(q), t.mono});
    }
    return {c, Polynomial::from_terms(std::move(terms))};
}

Irreducibility is_irreducible_heuristic(const Polynomial& g) {
    if (g.is_constant()) return Irreducibility::Irreducible;
    if (g.total_degree() == 1 && integer_content(g) == 1) return Irreducibility::Irreducible;
    return Irreducibility::Unknown;
}

}  // namespace parmreach
