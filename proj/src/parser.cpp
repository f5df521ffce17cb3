#include <cctype>
#include <stdexcept>

#include "subseq/formula.hpp"

namespace subseq {

namespace {

class FormulaParser {
public:
    FormulaParser(std::string_view text, const Alphabet& a) : text_(text), alpha_(a) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_iff();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    FormulaPtr parse_iff() {
        FormulaPtr f = parse_implies();
        skip_ws();
        if (match("<->")) return f_iff(f, parse_iff());
        return f;
    }

    FormulaPtr parse_implies() {
        FormulaPtr f = parse_or();
        skip_ws();
        if (match("->")) return f_implies(f, parse_implies());
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (true) {
            skip_ws();
            if (peek() == '|') {
                ++pos_;
                f = f_or(f, parse_and());
            } else {
                return f;
            }
        }
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (true) {
            skip_ws();
            if (peek() == '&') {
                ++pos_;
                f = f_and(f, parse_unary());
            } else {
                return f;
            }
        }
    }

    FormulaPtr parse_unary() {
        skip_ws();
        if (peek() == '!') {
            ++pos_;
            return f_not(parse_unary());
        }
        if (peek() == '(') {
            ++pos_;
            FormulaPtr f = parse_iff();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        // Quantifier: E/A identifier '.'
        std::size_t save = pos_;
        std::string word = peek_ident();
        if (word == "E" || word == "A") {
            pos_ += word.size();
            skip_ws();
            std::string var = peek_ident();
            if (!var.empty() && var != "in") {
                pos_ += var.size();
                skip_ws();
                if (peek() == '.') {
                    ++pos_;
                    FormulaPtr body = parse_iff_stop_at_close();
                    return word == "E" ? f_exists(var, body) : f_forall(var, body);
                }
            }
            pos_ = save;
        }
        return parse_atom();
    }

    // Quantifier bodies extend maximally, which parse_iff already provides:
    // it stops only at ')' or end of input.
    FormulaPtr parse_iff_stop_at_close() { return parse_iff(); }

    FormulaPtr parse_atom() {
        Term t = parse_term();
        skip_ws();
        if (match("in")) {
            skip_ws();
            if (peek() != '/') fail("expected '/' to open regex");
            ++pos_;
            std::size_t end = text_.find('/', pos_);
            if (end == std::string_view::npos) fail("unterminated regex");
            RegexPtr r = parse_regex(text_.substr(pos_, end - pos_), alpha_);
            pos_ = end + 1;
            return f_member(t, r);
        }
        Rel r;
        if (match("<=")) {
            r = Rel::SubEq;
        } else if (match("><")) {
            r = Rel::Inc;
        } else if (match(">=")) {
            Term rhs = parse_term_after();
            return f_rel(std::move(rhs), Rel::SubEq, std::move(t));
        } else if (match("<")) {
            r = Rel::Strict;
        } else if (match(">")) {
            r = Rel::StrictInv;
        } else if (match("=")) {
            r = Rel::Eq;
        } else {
            fail("expected relation symbol or 'in'");
            return nullptr;
        }
        Term rhs = parse_term_after();
        return f_rel(std::move(t), r, std::move(rhs));
    }

    Term parse_term_after() {
        skip_ws();
        return parse_term();
    }

    Term parse_term() {
        skip_ws();
        if (peek() == '"') {
            ++pos_;
            std::size_t end = text_.find('"', pos_);
            if (end == std::string_view::npos) fail("unterminated word constant");
            std::string letters(text_.substr(pos_, end - pos_));
            for (char c : letters)
                if (!alpha_.contains(c)) fail(std::string("constant letter not in alphabet: ") + c);
            pos_ = end + 1;
            return Term::constant(letters);
        }
        std::string id = peek_ident();
        if (id.empty()) fail("expected term");
        if (id == "E" || id == "A" || id == "in") fail("reserved word used as term: " + id);
        pos_ += id.size();
        return Term::var(id);
    }

    std::string peek_ident() {
        skip_ws();
        std::size_t i = pos_;
        if (i >= text_.size()) return "";
        if (!std::isalpha(static_cast<unsigned char>(text_[i])) && text_[i] != '_') return "";
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' ||
                text_[j] == '\''))
            ++j;
        return std::string(text_.substr(i, j - i));
    }

    bool match(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        // Avoid matching '<' as prefix of '<=' or '<->', '>' of '>=', '><'.
        if (tok == "<" && pos_ + 1 < text_.size() &&
            (text_[pos_ + 1] == '=' || text_[pos_ + 1] == '-'))
            return false;
        if (tok == ">" && pos_ + 1 < text_.size() &&
            (text_[pos_ + 1] == '=' || text_[pos_ + 1] == '<'))
            return false;
        if (tok == "in") {
            std::size_t after = pos_ + tok.size();
            if (after < text_.size() &&
                (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_' ||
                 text_[after] == '\''))
                return false;
        }
        pos_ += tok.size();
        return true;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("formula syntax error at position " + std::to_string(pos_) +
                                 ": " + msg);
    }

    std::string_view text_;
    const Alphabet& alpha_;
    std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const Alphabet& a) {
    return FormulaParser(text, a).parse();
}

}  // namespace subseq
