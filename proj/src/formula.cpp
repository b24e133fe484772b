#include "occlogic/formula.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "occlogic/common.hpp"

namespace occlogic {

FormulaPtr Formula::var(std::string name) {
    return Ptr(new Formula(Conn::Var, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::negation(Ptr f) {
    return Ptr(new Formula(Conn::Not, "", std::move(f), nullptr));
}
FormulaPtr Formula::conj(Ptr l, Ptr r) {
    return Ptr(new Formula(Conn::And, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::disj(Ptr l, Ptr r) {
    return Ptr(new Formula(Conn::Or, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::implies(Ptr l, Ptr r) {
    return Ptr(new Formula(Conn::Imp, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::iff(Ptr l, Ptr r) {
    return Ptr(new Formula(Conn::Iff, "", std::move(l), std::move(r)));
}

bool is_core(const FormulaPtr& f) {
    switch (f->conn) {
        case Conn::Var: return true;
        case Conn::Not: return is_core(f->left);
        case Conn::And: return is_core(f->left) && is_core(f->right);
        default: return false;
    }
}

FormulaPtr desugar(const FormulaPtr& f) {
    switch (f->conn) {
        case Conn::Var: return f;
        case Conn::Not: {
            FormulaPtr c = desugar(f->left);
            return c == f->left ? f : Formula::negation(c);
        }
        case Conn::And: {
            FormulaPtr l = desugar(f->left), r = desugar(f->right);
            return (l == f->left && r == f->right) ? f : Formula::conj(l, r);
        }
        case Conn::Or: {
            FormulaPtr l = desugar(f->left), r = desugar(f->right);
            return Formula::negation(
                Formula::conj(Formula::negation(l), Formula::negation(r)));
        }
        case Conn::Imp: {
            FormulaPtr l = desugar(f->left), r = desugar(f->right);
            return Formula::negation(Formula::conj(l, Formula::negation(r)));
        }
        case Conn::Iff: {
            FormulaPtr l = desugar(f->left), r = desugar(f->right);
            return Formula::conj(
                Formula::negation(Formula::conj(l, Formula::negation(r))),
                Formula::negation(Formula::conj(r, Formula::negation(l))));
        }
    }
    throw std::logic_error("bad connective");
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->conn != b->conn) return false;
    switch (a->conn) {
        case Conn::Var: return a->name == b->name;
        case Conn::Not: return structurally_equal(a->left, b->left);
        default:
            return structurally_equal(a->left, b->left) &&
                   structurally_equal(a->right, b->right);
    }
}

namespace {

int precedence(Conn c) {
    switch (c) {
        case Conn::Var: return 5;
        case Conn::Not: return 4;
        case Conn::And: return 3;
        case Conn::Or: return 2;
        case Conn::Imp: return 1;
        case Conn::Iff: return 0;
    }
    return -1;
}

const char* symbol(Conn c) {
    switch (c) {
        case Conn::And: return " & ";
        case Conn::Or: return " | ";
        case Conn::Imp: return " -> ";
        case Conn::Iff: return " <-> ";
        default: return "";
    }
}

void print(const FormulaPtr& f, std::ostream& os, int parent_prec) {
    int prec = precedence(f->conn);
    bool parens = prec < parent_prec;
    if (parens) os << '(';
    switch (f->conn) {
        case Conn::Var: os << f->name; break;
        case Conn::Not:
            os << '!';
            print(f->left, os, precedence(Conn::Not) + 1);
            break;
        default:
            // & and | are printed left associative, -> and <-> right
            // associative; the opposite side gets a strictly higher bound.
            if (f->conn == Conn::And || f->conn == Conn::Or) {
                print(f->left, os, prec);
                os << symbol(f->conn);
                print(f->right, os, prec + 1);
            } else {
                print(f->left, os, prec + 1);
                os << symbol(f->conn);
                print(f->right, os, prec);
            }
            break;
    }
    if (parens) os << ')';
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
    std::ostringstream os;
    print(f, os, 0);
    return os.str();
}

void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
    if (f->conn == Conn::Var) {
        out.insert(f->name);
        return;
    }
    if (f->left) collect_vars(f->left, out);
    if (f->right) collect_vars(f->right, out);
}

std::set<std::string> vars_of(const FormulaPtr& f) {
    std::set<std::string> out;
    collect_vars(f, out);
    return out;
}

FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, std::string>& map) {
    switch (f->conn) {
        case Conn::Var: {
            auto it = map.find(f->name);
            return it == map.end() ? f : Formula::var(it->second);
        }
        case Conn::Not: {
            FormulaPtr c = substitute(f->left, map);
            return c == f->left ? f : Formula::negation(c);
        }
        default: {
            FormulaPtr l = substitute(f->left, map);
            FormulaPtr r = substitute(f->right, map);
            if (l == f->left && r == f->right) return f;
            switch (f->conn) {
                case Conn::And: return Formula::conj(l, r);
                case Conn::Or: return Formula::disj(l, r);
                case Conn::Imp: return Formula::implies(l, r);
                default: return Formula::iff(l, r);
            }
        }
    }
}

namespace {

FormulaPtr subst_occ(const FormulaPtr& f, const std::string& var, int& remaining,
                     const FormulaPtr& replacement) {
    if (remaining == 0) return f;
    switch (f->conn) {
        case Conn::Var:
            if (f->name == var && --remaining == 0) return replacement;
            return f;
        case Conn::Not: {
            FormulaPtr c = subst_occ(f->left, var, remaining, replacement);
            return c == f->left ? f : Formula::negation(c);
        }
        default: {
            FormulaPtr l = subst_occ(f->left, var, remaining, replacement);
            FormulaPtr r = subst_occ(f->right, var, remaining, replacement);
            if (l == f->left && r == f->right) return f;
            switch (f->conn) {
                case Conn::And: return Formula::conj(l, r);
                case Conn::Or: return Formula::disj(l, r);
                case Conn::Imp: return Formula::implies(l, r);
                default: return Formula::iff(l, r);
            }
        }
    }
}

}  // namespace

FormulaPtr substitute_occurrence(const FormulaPtr& f, const std::string& var,
                                 int index, const FormulaPtr& replacement) {
    if (index < 1) throw std::out_of_range("occurrence index is 1-based");
    int remaining = index;
    FormulaPtr result = subst_occ(f, var, remaining, replacement);
    if (remaining != 0)
        throw std::out_of_range("formula has no occurrence " +
                                std::to_string(index) + " of " + var);
    return result;
}

void for_each_occurrence(
    const FormulaPtr& f,
    const std::function<void(const std::string&, Polarity)>& fn) {
    struct Walker {
        const std::function<void(const std::string&, Polarity)>& fn;
        void walk(const FormulaPtr& g, Polarity pol) {
            switch (g->conn) {
                case Conn::Var: fn(g->name, pol); break;
                case Conn::Not: walk(g->left, flip(pol)); break;
                case Conn::And:
                    walk(g->left, pol);
                    walk(g->right, pol);
                    break;
                default:
                    throw std::logic_error(
                        "for_each_occurrence requires core form");
            }
        }
    };
    Walker{fn}.walk(f, Polarity::Positive);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Atom, Not, And, Or, Imp, Iff, LParen, RParen, End };

struct Lexer {
    const std::string& text;
    int line;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string atom;
    int tok_col = 1;

    Lexer(const std::string& t, int line) : text(t), line(line) { next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, tok_col, msg);
    }

    bool match_utf8(const char* seq) {
        std::size_t n = std::char_traits<char>::length(seq);
        if (text.compare(pos, n, seq) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    void next() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        tok_col = static_cast<int>(pos) + 1;
        if (pos >= text.size() || text[pos] == '#') {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (c == '!') { ++pos; tok = Tok::Not; return; }
        if (c == '&') { ++pos; tok = Tok::And; return; }
        if (c == '|') { ++pos; tok = Tok::Or; return; }
        if (c == '(') { ++pos; tok = Tok::LParen; return; }
        if (c == ')') { ++pos; tok = Tok::RParen; return; }
        if (c == '<') {
            if (text.compare(pos, 3, "<->") == 0) { pos += 3; tok = Tok::Iff; return; }
            throw ParseError(line, tok_col, "expected '<->'");
        }
        if (c == '-') {
            if (text.compare(pos, 2, "->") == 0) { pos += 2; tok = Tok::Imp; return; }
            throw ParseError(line, tok_col, "expected '->'");
        }
        // unicode aliases
        if (match_utf8("¬")) { tok = Tok::Not; return; }   // ¬
        if (match_utf8("∧")) { tok = Tok::And; return; }   // ∧
        if (match_utf8("∨")) { tok = Tok::Or; return; }    // ∨
        if (match_utf8("→")) { tok = Tok::Imp; return; }   // →
        if (match_utf8("↔")) { tok = Tok::Iff; return; }   // ↔
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '_'))
                ++pos;
            atom = text.substr(start, pos - start);
            tok = Tok::Atom;
            return;
        }
        throw ParseError(line, tok_col, std::string("unexpected character '") + c + "'");
    }
};

struct Parser {
    Lexer lx;

    FormulaPtr parse_primary() {
        if (lx.tok == Tok::Atom) {
            FormulaPtr f = Formula::var(lx.atom);
            lx.next();
            return f;
        }
        if (lx.tok == Tok::Not) {
            lx.next();
            return Formula::negation(parse_primary());
        }
        if (lx.tok == Tok::LParen) {
            lx.next();
            FormulaPtr f = parse_iff();
            if (lx.tok != Tok::RParen) lx.fail("expected ')'");
            lx.next();
            return f;
        }
        lx.fail("expected formula");
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_primary();
        while (lx.tok == Tok::And) {
            lx.next();
            f = Formula::conj(f, parse_primary());
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (lx.tok == Tok::Or) {
            lx.next();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    FormulaPtr parse_imp() {
        FormulaPtr f = parse_or();
        if (lx.tok == Tok::Imp) {
            lx.next();
            return Formula::implies(f, parse_imp());  // right associative
        }
        return f;
    }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_imp();
        if (lx.tok == Tok::Iff) {
            lx.next();
            return Formula::iff(f, parse_iff());  // right associative
        }
        return f;
    }
};

}  // namespace

FormulaPtr parse_line(const std::string& text, int line_no) {
    Parser p{Lexer(text, line_no)};
    if (p.lx.tok == Tok::End) return nullptr;  // blank or comment-only line
    FormulaPtr f = p.parse_iff();
    if (p.lx.tok != Tok::End) p.lx.fail("trailing input after formula");
    return f;
}

FormulaPtr parse_formula(const std::string& text) {
    FormulaPtr f = parse_line(text, 1);
    if (!f) throw ParseError(1, 1, "empty formula");
    return f;
}

}  // namespace occlogic
