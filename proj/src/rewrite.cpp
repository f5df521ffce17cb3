#include <stdexcept>
#include <variant>

#include "subseq/formula.hpp"
#include "subseq/nfa.hpp"

namespace subseq {

namespace {

// ---------------------------------------------------------------- constants

// Language {v : v R w} as a regex, for a variable on the left of the atom.
RegexPtr closure_regex_left(Rel r, const Word& w) {
    const Alphabet& a = w.alphabet();
    switch (r) {
        case Rel::SubEq: {  // v <= w: the finite subword set, (w1+@)(w2+@)...
            RegexPtr re = Regex::epsilon();
            for (char c : w.letters())
                re = Regex::concat(re, Regex::union_(Regex::symbol(c), Regex::epsilon()));
            return re;
        }
        case Rel::Strict: {  // proper subwords, enumerated
            RegexPtr re = Regex::empty();
            for (const Word& s : subwords_upto(w, w.length()))
                if (!(s == w)) re = Regex::union_(re, Regex::literal(s.letters()));
            return re;
        }
        case Rel::StrictInv:
            return nfa_to_regex(word_closure(ClosureKind::StrictUp, w));
        case Rel::Eq:
            return Regex::literal(w.letters());
        case Rel::Inc:
            return nfa_to_regex(word_closure(ClosureKind::Incomparable, w));
    }
    throw std::logic_error("unreachable rel");
    (void)a;
}

// Language {v : w R v} as a regex, for a variable on the right of the atom.
RegexPtr closure_regex_right(Rel r, const Word& w) {
    switch (r) {
        case Rel::SubEq: {  // w <= v: A* w1 A* ... wk A*
            RegexPtr any = Regex::universal(w.alphabet());
            RegexPtr re = any;
            for (char c : w.letters())
                re = Regex::concat(re, Regex::concat(Regex::symbol(c), any));
            return re;
        }
        case Rel::Strict:
            return nfa_to_regex(word_closure(ClosureKind::StrictUp, w));
        case Rel::StrictInv:
            return closure_regex_left(Rel::Strict, w);
        case Rel::Eq:
            return Regex::literal(w.letters());
        case Rel::Inc:
            return closure_regex_left(Rel::Inc, w);
    }
    throw std::logic_error("unreachable rel");
}

bool ground_truth(Rel r, const Word& l, const Word& rt) {
    CompareResult c = compare(l, rt);
    switch (r) {
        case Rel::SubEq: return c == CompareResult::Equal || c == CompareResult::Less;
        case Rel::Strict: return c == CompareResult::Less;
        case Rel::StrictInv: return c == CompareResult::Greater;
        case Rel::Eq: return c == CompareResult::Equal;
        case Rel::Inc: return c == CompareResult::Incomparable;
    }
    return false;
}

// Either a rewritten formula or a truth constant to be folded by the parent.
using Folded = std::variant<FormulaPtr, bool>;

Folded elim(const FormulaPtr& f, const Alphabet& a, std::set<std::string>& scope);

FormulaPtr materialize(const Folded& v, const Alphabet& a, const std::set<std::string>& scope) {
    if (std::holds_alternative<FormulaPtr>(v)) return std::get<FormulaPtr>(v);
    bool truth = std::get<bool>(v);
    RegexPtr lang = truth ? Regex::universal(a) : Regex::empty();
    if (!scope.empty()) return f_member(Term::var(*scope.begin()), lang);
    // No variable in scope: quantify a fresh one. A* is nonempty, so the
    // existential preserves the truth value.
    return f_exists("c0", f_member(Term::var("c0"), lang));
}

Folded elim(const FormulaPtr& f, const Alphabet& a, std::set<std::string>& scope) {
    switch (f->kind) {
        case Formula::Kind::RelAtom: {
            const Term& l = f->left;
            const Term& r = f->right;
            if (!l.is_const && !r.is_const) return FormulaPtr(f);
            if (l.is_const && r.is_const)
                return ground_truth(f->rel, Word(a, l.text), Word(a, r.text));
            if (l.is_const)  // w R x
                return f_member(r, closure_regex_right(f->rel, Word(a, l.text)));
            // x R w
            return f_member(l, closure_regex_left(f->rel, Word(a, r.text)));
        }
        case Formula::Kind::MemberAtom: {
            if (!f->left.is_const) return FormulaPtr(f);
            return nfa_member(regex_to_nfa(f->lang, a), Word(a, f->left.text));
        }
        case Formula::Kind::Not: {
            Folded x = elim(f->a, a, scope);
            if (std::holds_alternative<bool>(x)) return !std::get<bool>(x);
            return f_not(std::get<FormulaPtr>(x));
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool is_and = f->kind == Formula::Kind::And;
            Folded l = elim(f->a, a, scope);
            Folded r = elim(f->b, a, scope);
            if (std::holds_alternative<bool>(l)) {
                bool bl = std::get<bool>(l);
                if (is_and) return bl ? r : Folded(false);
                return bl ? Folded(true) : r;
            }
            if (std::holds_alternative<bool>(r)) {
                bool br = std::get<bool>(r);
                if (is_and) return br ? l : Folded(false);
                return br ? Folded(true) : l;
            }
            FormulaPtr fl = std::get<FormulaPtr>(l), fr = std::get<FormulaPtr>(r);
            return is_and ? f_and(fl, fr) : f_or(fl, fr);
        }
        case Formula::Kind::Implies: {
            Folded l = elim(f->a, a, scope);
            Folded r = elim(f->b, a, scope);
            if (std::holds_alternative<bool>(l)) {
                bool bl = std::get<bool>(l);
                if (!bl) return true;
                return r;
            }
            if (std::holds_alternative<bool>(r)) {
                bool br = std::get<bool>(r);
                if (br) return true;
                return f_not(std::get<FormulaPtr>(l));
            }
            return f_implies(std::get<FormulaPtr>(l), std::get<FormulaPtr>(r));
        }
        case Formula::Kind::Iff: {
            Folded l = elim(f->a, a, scope);
            Folded r = elim(f->b, a, scope);
            if (std::holds_alternative<bool>(l) && std::holds_alternative<bool>(r))
                return std::get<bool>(l) == std::get<bool>(r);
            if (std::holds_alternative<bool>(l)) {
                FormulaPtr fr = std::get<FormulaPtr>(r);
                return std::get<bool>(l) ? fr : f_not(fr);
            }
            if (std::holds_alternative<bool>(r)) {
                FormulaPtr fl = std::get<FormulaPtr>(l);
                return std::get<bool>(r) ? fl : f_not(fl);
            }
            return f_iff(std::get<FormulaPtr>(l), std::get<FormulaPtr>(r));
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool inserted = scope.insert(f->var).second;
            Folded b = elim(f->body, a, scope);
            FormulaPtr body = materialize(b, a, scope);
            if (inserted) scope.erase(f->var);
            return f->kind == Formula::Kind::Exists ? f_exists(f->var, body)
                                                    : f_forall(f->var, body);
        }
    }
    throw std::logic_error("unreachable formula kind");
}

// ------------------------------------------------------------ normal forms

// Expand every SubEq atom into Strict-or-Eq so negation elimination can use
// the four-relation partition.
FormulaPtr expand_subeq(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
            if (f->rel == Rel::SubEq)
                return f_or(f_rel(f->left, Rel::Strict, f->right),
                            f_rel(f->left, Rel::Eq, f->right));
            return f;
        case Formula::Kind::MemberAtom:
            return f;
        case Formula::Kind::Not:
            return f_not(expand_subeq(f->a));
        case Formula::Kind::And:
            return f_and(expand_subeq(f->a), expand_subeq(f->b));
        case Formula::Kind::Or:
            return f_or(expand_subeq(f->a), expand_subeq(f->b));
        case Formula::Kind::Implies:
            return f_implies(expand_subeq(f->a), expand_subeq(f->b));
        case Formula::Kind::Iff:
            return f_iff(expand_subeq(f->a), expand_subeq(f->b));
        case Formula::Kind::Exists:
            return f_exists(f->var, expand_subeq(f->body));
        case Formula::Kind::Forall:
            return f_forall(f->var, expand_subeq(f->body));
    }
    throw std::logic_error("unreachable");
}

RegexPtr complement_regex(const RegexPtr& r, const Alphabet& a) {
    return nfa_to_regex(nfa_complement(regex_to_nfa(r, a)));
}

// The remaining three relations of {=, <, >, incomparable}, in that order.
std::vector<Rel> other_rels(Rel r) {
    std::vector<Rel> out;
    for (Rel cand : {Rel::Eq, Rel::Strict, Rel::StrictInv, Rel::Inc})
        if (cand != r) out.push_back(cand);
    return out;
}

FormulaPtr nnf(const FormulaPtr& f, bool negated, const Alphabet& a) {
    switch (f->kind) {
        case Formula::Kind::RelAtom: {
            if (!negated) return f;
            std::vector<FormulaPtr> alts;
            for (Rel r : other_rels(f->rel)) alts.push_back(f_rel(f->left, r, f->right));
            return f_or_all(alts, nullptr);
        }
        case Formula::Kind::MemberAtom:
            if (!negated) return f;
            return f_member(f->left, complement_regex(f->lang, a));
        case Formula::Kind::Not:
            return nnf(f->a, !negated, a);
        case Formula::Kind::And: {
            FormulaPtr l = nnf(f->a, negated, a), r = nnf(f->b, negated, a);
            return negated ? f_or(l, r) : f_and(l, r);
        }
        case Formula::Kind::Or: {
            FormulaPtr l = nnf(f->a, negated, a), r = nnf(f->b, negated, a);
            return negated ? f_and(l, r) : f_or(l, r);
        }
        case Formula::Kind::Implies: {
            // a -> b  ==  !a | b
            FormulaPtr l = nnf(f->a, !negated, a), r = nnf(f->b, negated, a);
            return negated ? f_and(l, r) : f_or(l, r);
        }
        case Formula::Kind::Iff: {
            FormulaPtr fwd = f_implies(f->a, f->b), bwd = f_implies(f->b, f->a);
            FormulaPtr l = nnf(fwd, negated, a), r = nnf(bwd, negated, a);
            return negated ? f_or(l, r) : f_and(l, r);
        }
        case Formula::Kind::Exists: {
            FormulaPtr body = nnf(f->body, negated, a);
            return negated ? f_forall(f->var, body) : f_exists(f->var, body);
        }
        case Formula::Kind::Forall: {
            FormulaPtr body = nnf(f->body, negated, a);
            return negated ? f_exists(f->var, body) : f_forall(f->var, body);
        }
    }
    throw std::logic_error("unreachable");
}

// Distribute conjunction over disjunction; input is negation-free.
FormulaPtr dnf(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Or:
            return f_or(dnf(f->a), dnf(f->b));
        case Formula::Kind::And: {
            FormulaPtr l = dnf(f->a), r = dnf(f->b);
            if (l->kind == Formula::Kind::Or)
                return f_or(dnf(f_and(l->a, r)), dnf(f_and(l->b, r)));
            if (r->kind == Formula::Kind::Or)
                return f_or(dnf(f_and(l, r->a)), dnf(f_and(l, r->b)));
            return f_and(l, r);
        }
        default:
            return f;
    }
}

}  // namespace

FormulaPtr eliminate_constants(const FormulaPtr& f, const Alphabet& a) {
    std::set<std::string> scope = free_variables(f);
    Folded v = elim(f, a, scope);
    return materialize(v, a, scope);
}

FormulaPtr normalize(const FormulaPtr& f, NormalForm form, const Alphabet& a) {
    if (form == NormalForm::DnfQf && !is_quantifier_free(f))
        throw std::invalid_argument("DnfQf normalization requires a quantifier-free formula");
    FormulaPtr n = nnf(expand_subeq(f), false, a);
    if (form == NormalForm::Nnf) return n;
    return dnf(n);
}

}  // namespace subseq
