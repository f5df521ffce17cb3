#include <algorithm>

#include "subseq/formula.hpp"

namespace subseq {

namespace {

struct Levels {
    int sigma;
    int pi;
};

// Minimal Sigma_n/Pi_n indices per the inductive rules. Quantified formulas
// are never in Sigma_0/Pi_0, so inside the recursion atoms sit at level 1;
// quantifier-free formulas are reported as level 0 by classify() itself.
Levels levels(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
        case Formula::Kind::MemberAtom:
            return {1, 1};
        case Formula::Kind::Not: {
            Levels l = levels(f->a);
            return {l.pi, l.sigma};
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Levels l = levels(f->a), r = levels(f->b);
            return {std::max(l.sigma, r.sigma), std::max(l.pi, r.pi)};
        }
        case Formula::Kind::Implies: {
            // not a | b
            Levels l = levels(f->a), r = levels(f->b);
            return {std::max(l.pi, r.sigma), std::max(l.sigma, r.pi)};
        }
        case Formula::Kind::Iff: {
            Levels l = levels(f->a), r = levels(f->b);
            int m = std::max({l.sigma, l.pi, r.sigma, r.pi});
            return {m, m};
        }
        case Formula::Kind::Exists: {
            Levels l = levels(f->body);
            return {std::max(1, l.sigma), l.sigma + 1};
        }
        case Formula::Kind::Forall: {
            Levels l = levels(f->body);
            return {l.pi + 1, std::max(1, l.pi)};
        }
    }
    return {1, 1};
}

Dialect dialect_of(const FormulaPtr& f) {
    Dialect d = Dialect::Pure;
    std::vector<const Formula*> stack{f.get()};
    while (!stack.empty()) {
        const Formula* n = stack.back();
        stack.pop_back();
        switch (n->kind) {
            case Formula::Kind::MemberAtom:
                return Dialect::Extended;
            case Formula::Kind::RelAtom:
                if (n->left.is_const || n->right.is_const) d = Dialect::Basic;
                break;
            case Formula::Kind::Not:
                stack.push_back(n->a.get());
                break;
            case Formula::Kind::And:
            case Formula::Kind::Or:
            case Formula::Kind::Implies:
            case Formula::Kind::Iff:
                stack.push_back(n->a.get());
                stack.push_back(n->b.get());
                break;
            case Formula::Kind::Exists:
            case Formula::Kind::Forall:
                stack.push_back(n->body.get());
                break;
        }
    }
    return d;
}

}  // namespace

FragmentProfile classify(const FormulaPtr& f) {
    FragmentProfile p;
    p.dialect = dialect_of(f);
    p.fo_vars = static_cast<int>(all_variable_names(f).size());
    if (is_quantifier_free(f)) {
        p.sigma_level = 0;
        p.pi_level = 0;
    } else {
        Levels l = levels(f);
        p.sigma_level = l.sigma;
        p.pi_level = l.pi;
    }
    return p;
}

}  // namespace subseq
