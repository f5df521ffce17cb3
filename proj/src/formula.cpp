#include "subseq/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace subseq {

namespace {

std::shared_ptr<Formula> node(Formula::Kind k) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}

}  // namespace

FormulaPtr f_rel(Term l, Rel r, Term rt) {
    auto f = node(Formula::Kind::RelAtom);
    f->left = std::move(l);
    f->rel = r;
    f->right = std::move(rt);
    return f;
}

FormulaPtr f_member(Term t, RegexPtr lang) {
    auto f = node(Formula::Kind::MemberAtom);
    f->left = std::move(t);
    f->lang = std::move(lang);
    return f;
}

FormulaPtr f_not(FormulaPtr a) {
    auto f = node(Formula::Kind::Not);
    f->a = std::move(a);
    return f;
}

namespace {
FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = node(k);
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}
}  // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Or, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Implies, std::move(a), std::move(b)); }
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Iff, std::move(a), std::move(b)); }

FormulaPtr f_exists(std::string var, FormulaPtr body) {
    auto f = node(Formula::Kind::Exists);
    f->var = std::move(var);
    f->body = std::move(body);
    return f;
}

FormulaPtr f_forall(std::string var, FormulaPtr body) {
    auto f = node(Formula::Kind::Forall);
    f->var = std::move(var);
    f->body = std::move(body);
    return f;
}

FormulaPtr f_and_all(std::vector<FormulaPtr> fs, FormulaPtr fallback) {
    if (fs.empty()) return fallback;
    FormulaPtr out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
    return out;
}

FormulaPtr f_or_all(std::vector<FormulaPtr> fs, FormulaPtr fallback) {
    if (fs.empty()) return fallback;
    FormulaPtr out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = f_or(out, fs[i]);
    return out;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::RelAtom:
            return a->rel == b->rel && a->left == b->left && a->right == b->right;
        case Formula::Kind::MemberAtom:
            return a->left == b->left && regex_equal(a->lang, b->lang);
        case Formula::Kind::Not:
            return formula_equal(a->a, b->a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return formula_equal(a->a, b->a) && formula_equal(a->b, b->b);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return a->var == b->var && formula_equal(a->body, b->body);
    }
    return false;
}

namespace {

// Precedence for printing: iff 1, implies 2, or 3, and 4, not 5, atom 6.
// Quantified formulas extend maximally, so they parenthesize whenever the
// context requires more than the loosest level.
int print_level(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: return 0;
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not: return 5;
        default: return 6;
    }
}

std::string term_text(const Term& t) {
    if (t.is_const) return '"' + t.text + '"';
    return t.text;
}

const char* rel_text(Rel r) {
    switch (r) {
        case Rel::SubEq: return "<=";
        case Rel::Strict: return "<";
        case Rel::StrictInv: return ">";
        case Rel::Eq: return "=";
        case Rel::Inc: return "><";
    }
    return "?";
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
    bool paren = print_level(f) < min_level;
    if (paren) out += '(';
    switch (f->kind) {
        case Formula::Kind::RelAtom:
            out += term_text(f->left);
            out += ' ';
            out += rel_text(f->rel);
            out += ' ';
            out += term_text(f->right);
            break;
        case Formula::Kind::MemberAtom:
            out += term_text(f->left);
            out += " in /";
            out += print_regex(f->lang);
            out += '/';
            break;
        case Formula::Kind::Not:
            out += '!';
            print_rec(f->a, 6, out);
            break;
        case Formula::Kind::And:
            print_rec(f->a, 4, out);
            out += " & ";
            print_rec(f->b, 5, out);
            break;
        case Formula::Kind::Or:
            print_rec(f->a, 3, out);
            out += " | ";
            print_rec(f->b, 4, out);
            break;
        case Formula::Kind::Implies:
            print_rec(f->a, 3, out);
            out += " -> ";
            print_rec(f->b, 2, out);
            break;
        case Formula::Kind::Iff:
            print_rec(f->a, 2, out);
            out += " <-> ";
            print_rec(f->b, 1, out);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            out += f->kind == Formula::Kind::Exists ? 'E' : 'A';
            out += ' ';
            out += f->var;
            out += ". ";
            print_rec(f->body, 0, out);
            break;
    }
    if (paren) out += ')';
}

void walk_terms(const FormulaPtr& f, auto&& on_term, auto&& on_quant) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
            on_term(f->left);
            on_term(f->right);
            break;
        case Formula::Kind::MemberAtom:
            on_term(f->left);
            break;
        case Formula::Kind::Not:
            walk_terms(f->a, on_term, on_quant);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            walk_terms(f->a, on_term, on_quant);
            walk_terms(f->b, on_term, on_quant);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            on_quant(f->var);
            walk_terms(f->body, on_term, on_quant);
            break;
    }
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
        case Formula::Kind::MemberAtom: {
            auto add = [&](const Term& t) {
                if (!t.is_const && !bound.count(t.text)) out.insert(t.text);
            };
            add(f->left);
            if (f->kind == Formula::Kind::RelAtom) add(f->right);
            break;
        }
        case Formula::Kind::Not:
            collect_free(f->a, bound, out);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            collect_free(f->a, bound, out);
            collect_free(f->b, bound, out);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool inserted = bound.insert(f->var).second;
            collect_free(f->body, bound, out);
            if (inserted) bound.erase(f->var);
            break;
        }
    }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

std::set<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_variable_names(const FormulaPtr& f) {
    std::set<std::string> names;
    walk_terms(
        f,
        [&](const Term& t) {
            if (!t.is_const) names.insert(t.text);
        },
        [&](const std::string& v) { names.insert(v); });
    return names;
}

bool is_quantifier_free(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
        case Formula::Kind::MemberAtom: return true;
        case Formula::Kind::Not: return is_quantifier_free(f->a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return is_quantifier_free(f->a) && is_quantifier_free(f->b);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: return false;
    }
    return false;
}

std::set<std::string> constant_texts(const FormulaPtr& f) {
    std::set<std::string> out;
    walk_terms(
        f,
        [&](const Term& t) {
            if (t.is_const) out.insert(t.text);
        },
        [](const std::string&) {});
    return out;
}

std::string dialect_name(Dialect d) {
    switch (d) {
        case Dialect::Pure: return "pure";
        case Dialect::Basic: return "basic";
        case Dialect::Extended: return "extended";
    }
    return "?";
}

}  // namespace subseq
