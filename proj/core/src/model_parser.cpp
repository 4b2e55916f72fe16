#include "parmreach/model_parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "parmreach/errors.hpp"
#include "parmreach/session.hpp"

namespace parmreach {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent parser for one expression; columns are 1-based and
// relative to the start of the line.
class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line, std::size_t column_offset,
               const std::set<std::string>* allowed)
        : text_(text), line_(line), offset_(column_offset), allowed_(allowed) {}

    RationalFunction parse() {
        RationalFunction value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, offset_ + pos_ + 1, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction value = term();
        while (true) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    RationalFunction term() {
        RationalFunction value = factor();
        while (true) {
            if (accept('*')) {
                value *= factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                value /= d;
            } else {
                return value;
            }
        }
    }

    RationalFunction factor() {
        bool negate = accept('-');
        RationalFunction value = atom();
        if (accept('^')) {
            std::uint32_t e = uint_literal();
            RationalFunction base = value;
            value = RationalFunction(1);
            for (std::uint32_t i = 0; i < e; ++i) value *= base;
        }
        return negate ? -value : value;
    }

    std::uint32_t uint_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an unsigned integer");
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) {
            pos_ = start;
            fail("exponent too large");
        }
        return static_cast<std::uint32_t>(std::stoul(digits));
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction value = expr();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            std::string literal(text_.substr(start, pos_ - start));
            try {
                return RationalFunction(parse_rational(literal));
            } catch (const std::invalid_argument&) {
                pos_ = start;
                fail("malformed number '" + literal + "'");
            }
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto& vars = current_session().variables();
            if (allowed_) {
                if (!allowed_->count(name)) {
                    pos_ = start;
                    fail("unknown parameter '" + name + "'");
                }
                return RationalFunction::variable(vars.intern(name));
            }
            auto v = vars.find(name);
            if (!v) {
                pos_ = start;
                fail("unknown parameter '" + name + "'");
            }
            return RationalFunction::variable(*v);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t offset_;
    const std::set<std::string>* allowed_;
};

// Word-level cursor over one directive line.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, pos_ + 1, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::size_t column() const { return pos_ + 1; }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected an identifier");
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    std::string_view rest(std::size_t& column) {
        column = pos_;
        return text_.substr(pos_);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(start, end - start));
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(Line{number, std::move(line)});
        start = end + 1;
    }
    return lines;
}

}  // namespace

Pdtmc parse_model(std::string_view text) {
    Pdtmc m;
    std::set<std::string> params;
    std::unordered_map<std::string, StateId> states;
    std::vector<Line> lines = split_lines(text);

    // declarations first so that later lines may refer to any state
    for (const Line& line : lines) {
        LineCursor cur(line.text, line.number);
        if (cur.at_end()) continue;
        std::string directive = cur.word();
        if (directive == "@params") {
            while (!cur.at_end()) {
                std::string name = cur.ident();
                if (params.insert(name).second) m.add_param(current_session().variables().intern(name));
            }
        } else if (directive == "@state") {
            std::size_t col = cur.column();
            std::string name = cur.ident();
            if (!cur.at_end()) cur.fail("one state per @state line");
            if (states.count(name)) throw SyntaxError(line.number, col, "duplicate state '" + name + "'");
            states.emplace(name, m.add_state(name));
        } else if (directive != "@init" && directive != "@trans" && directive != "@target") {
            throw SyntaxError(line.number, 1, "unknown directive '" + directive + "'");
        }
    }

    auto state_ref = [&](LineCursor& cur, std::size_t line_no) {
        cur.skip_ws();
        std::size_t col = cur.column();
        std::string name = cur.ident();
        auto it = states.find(name);
        if (it == states.end())
            throw UnknownState(std::to_string(line_no) + ":" + std::to_string(col) + ": unknown state '" + name + "'");
        return it->second;
    };
    auto expression = [&](LineCursor& cur, std::size_t line_no) {
        std::size_t col = 0;
        std::string_view body = cur.rest(col);
        return ExprParser(body, line_no, col, &params).parse();
    };

    for (const Line& line : lines) {
        LineCursor cur(line.text, line.number);
        if (cur.at_end()) continue;
        std::string directive = cur.word();
        if (directive == "@init") {
            StateId s = state_ref(cur, line.number);
            cur.expect(":");
            RationalFunction value = expression(cur, line.number);
            RationalFunction sum = m.init().count(s) ? m.init().at(s) + value : value;
            m.set_init(s, std::move(sum));
        } else if (directive == "@trans") {
            StateId from = state_ref(cur, line.number);
            cur.expect("->");
            StateId to = state_ref(cur, line.number);
            cur.expect(":");
            m.add_transition(from, to, expression(cur, line.number));
        } else if (directive == "@target") {
            if (cur.at_end()) cur.fail("@target needs at least one state");
            while (!cur.at_end()) m.add_target(state_ref(cur, line.number));
        }
    }

    for (StateId s : m.states())
        if (m.row(s).empty()) m.make_absorbing(s);

    RationalFunction init_sum;
    for (const auto& [s, f] : m.init()) init_sum += f;
    if (!init_sum.is_one())
        throw RowSumNotOne("initial distribution does not sum to 1; residual " +
                           (RationalFunction(1) - init_sum).to_string());
    for (StateId s : m.states()) {
        RationalFunction sum = m.row_sum(s);
        if (!sum.is_one())
            throw RowSumNotOne("row of state '" + m.label(s) + "' does not sum to 1; residual " +
                               (RationalFunction(1) - sum).to_string());
    }
    for (StateId t : m.targets())
        if (!m.is_absorbing(t)) throw TargetNotAbsorbing("target state '" + m.label(t) + "' is not absorbing");
    return m;
}

Pdtmc load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str());
}

std::string write_model(const Pdtmc& m) {
    const auto& vars = current_session().variables();
    std::ostringstream os;
    if (!m.params().empty()) {
        os << "@params";
        for (Variable v : m.params()) os << ' ' << vars.name(v);
        os << '\n';
    }
    for (StateId s : m.states()) os << "@state " << m.label(s) << '\n';
    for (const auto& [s, f] : m.init()) os << "@init " << m.label(s) << " : " << f.to_string() << '\n';
    for (const auto& [s, row] : m.transitions()) {
        if (!m.has_state(s)) continue;
        for (const auto& [t, f] : row)
            os << "@trans " << m.label(s) << " -> " << m.label(t) << " : " << f.to_string() << '\n';
    }
    if (!m.targets().empty()) {
        os << "@target";
        for (StateId t : m.targets()) os << ' ' << m.label(t);
        os << '\n';
    }
    return os.str();
}

RationalFunction parse_expression(std::string_view text) { return ExprParser(text, 1, 0, nullptr).parse(); }

}  // namespace parmreach
