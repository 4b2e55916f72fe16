#include "parmreach/smt_export.hpp"

#include <set>
#include <sstream>

#include "parmreach/session.hpp"

namespace parmreach {
namespace {

std::string smt_number(const Rational& r) {
    Rational a = abs(r);
    std::string body = a.get_den() == 1 ? a.get_num().get_str()
                                         : "(/ " + a.get_num().get_str() + " " + a.get_den().get_str() + ")";
    return sgn(r) < 0 ? "(- " + body + ")" : body;
}

std::string smt_monomial(const Monomial& m) {
    const auto& vars = current_session().variables();
    std::vector<std::string> factors;
    for (const auto& [v, e] : m.powers())
        for (std::uint32_t i = 0; i < e; ++i) factors.push_back(vars.name(Variable{v}));
    if (factors.size() == 1) return factors.front();
    std::string s = "(*";
    for (const auto& f : factors) s += " " + f;
    return s + ")";
}

std::string product(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return "(* " + a + " " + b + ")";
}

struct Script {
    std::set<std::string> seen;
    std::ostringstream body;

    void assert_(const std::string& comment, const std::string& formula) {
        if (!seen.insert(formula).second) return;
        body << "; " << comment << "\n(assert " << formula << ")\n";
    }
};

std::string edge_label(const Pdtmc& m, StatePair e) { return m.label(e.first) + " -> " + m.label(e.second); }

void edge_assertions(Script& out, const Pdtmc& m, const Constraint& c) {
    const RationalFunction& f = c.function;
    std::string where = "edge " + edge_label(m, c.context);
    if (f.is_constant()) {
        Rational v = f.constant_value();
        if (v <= 0 || v > 1) out.assert_(where, "false");
        return;
    }
    Polynomial num = f.num().expand();
    Polynomial den = f.den().expand();
    if (den.is_constant()) {
        Rational scale(den.constant_value());
        out.assert_(where, "(< 0 " + smt_term(num, scale) + ")");
        out.assert_(where, "(< " + smt_term(num, scale) + " 1)");
    } else {
        std::string d = smt_term(den);
        out.assert_(where, "(< 0 " + product(smt_term(num), d) + ")");
        out.assert_(where, "(< 0 " + product(smt_term(den - num), d) + ")");
    }
}

void denominator_assertion(Script& out, const Pdtmc& m, const Constraint& c) {
    const RationalFunction& f = c.function;
    std::string where = "abstraction denominator at " + m.label(c.context.first);
    if (f.is_constant()) {
        if (f.is_zero()) out.assert_(where, "false");
        return;
    }
    Polynomial num = f.num().expand();
    Polynomial den = f.den().expand();
    std::string term = den.is_constant() ? smt_term(num) : product(smt_term(num), smt_term(den));
    out.assert_(where, "(not (= " + term + " 0))");
}

}  // namespace

std::string smt_term(const Polynomial& p, const Rational& scale) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const Term& t : p.terms()) {
        Rational c = Rational(t.coeff) / scale;
        c.canonicalize();
        if (t.mono.is_one())
            parts.push_back(smt_number(c));
        else if (c == 1)
            parts.push_back(smt_monomial(t.mono));
        else
            parts.push_back(product(smt_number(c), smt_monomial(t.mono)));
    }
    if (parts.size() == 1) return parts.front();
    std::string s = "(+";
    for (const auto& part : parts) s += " " + part;
    return s + ")";
}

std::string collect_constraints(const ReachabilityResult& r, const Pdtmc& m) {
    const auto& vars = current_session().variables();
    std::ostringstream os;
    os << "(set-logic QF_NRA)\n";
    for (Variable v : m.params()) os << "(declare-const " << vars.name(v) << " Real)\n";
    Script script;
    for (const Constraint& c : r.constraints) {
        if (c.kind == Constraint::Kind::EdgePositive)
            edge_assertions(script, m, c);
        else
            denominator_assertion(script, m, c);
    }
    os << script.body.str() << "(check-sat)\n";
    return os.str();
}

}  // namespace parmreach
