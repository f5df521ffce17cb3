#include "subseq/decider.hpp"

#include <algorithm>
#include <stdexcept>

#include "subseq/transducer.hpp"

namespace subseq {

bool rel_holds(Rel r, const Word& l, const Word& rt) {
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

namespace {

// --------------------------------------------------------------- guards

void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind == Formula::Kind::And) {
        flatten_and(f->a, out);
        flatten_and(f->b, out);
    } else {
        out.push_back(f);
    }
}

bool term_usable(const Term& t, const std::string& var, const std::set<std::string>& scope) {
    if (t.is_const) return true;
    return t.text != var && scope.count(t.text) > 0;
}

// A conjunct pinning `var` below a term that is defined at this point:
// var <= t, var < t, var = t, or t > var.
std::optional<Term> guard_in_conjuncts(const std::vector<FormulaPtr>& conjuncts,
                                       const std::string& var,
                                       const std::set<std::string>& scope) {
    for (const FormulaPtr& c : conjuncts) {
        if (c->kind != Formula::Kind::RelAtom) continue;
        const Term& l = c->left;
        const Term& r = c->right;
        bool left_is_var = !l.is_const && l.text == var;
        bool right_is_var = !r.is_const && r.text == var;
        if (left_is_var && term_usable(r, var, scope) &&
            (c->rel == Rel::SubEq || c->rel == Rel::Strict || c->rel == Rel::Eq))
            return r;
        if (right_is_var && term_usable(l, var, scope) && c->rel == Rel::StrictInv)
            return l;
    }
    return std::nullopt;
}

std::optional<Term> quantifier_guard(Formula::Kind kind, const std::string& var,
                                     const FormulaPtr& body,
                                     const std::set<std::string>& scope) {
    std::vector<FormulaPtr> conjuncts;
    if (kind == Formula::Kind::Exists) {
        flatten_and(body, conjuncts);
    } else {
        if (body->kind != Formula::Kind::Implies) return std::nullopt;
        flatten_and(body->a, conjuncts);
    }
    return guard_in_conjuncts(conjuncts, var, scope);
}

// ---------------------------------------------------------- bounded eval

struct EvalContext {
    Alphabet alphabet;
    std::size_t universe_len;
    std::vector<Word> universe;
    std::map<const Regex*, Nfa> nfas;
    std::map<std::pair<std::string, std::size_t>, std::vector<Word>> subword_domains;

    const Nfa& nfa_for(const RegexPtr& r) {
        auto it = nfas.find(r.get());
        if (it == nfas.end())
            it = nfas.emplace(r.get(), regex_to_nfa(r, alphabet)).first;
        return it->second;
    }

    const std::vector<Word>& subwords_of(const Word& w) {
        auto key = std::make_pair(w.letters(), universe_len);
        auto it = subword_domains.find(key);
        if (it == subword_domains.end()) {
            std::vector<Word> dom = subwords_upto(w, std::min(w.length(), universe_len));
            it = subword_domains.emplace(std::move(key), std::move(dom)).first;
        }
        return it->second;
    }
};

Word resolve(const Term& t, const Valuation& env, const Alphabet& a) {
    if (t.is_const) return Word(a, t.text);
    auto it = env.find(t.text);
    if (it == env.end())
        throw std::invalid_argument("unbound free variable: " + t.text);
    return it->second;
}

bool eval_rec(const FormulaPtr& f, Valuation& env, EvalContext& ctx);

// Evaluate And/Or children quantifier-free-first; short-circuiting on the
// cheap atoms first saves scanning quantifier domains.
bool eval_junction(const FormulaPtr& f, Valuation& env, EvalContext& ctx, bool is_and) {
    std::vector<FormulaPtr> kids{f->a, f->b};
    std::stable_sort(kids.begin(), kids.end(), [](const FormulaPtr& x, const FormulaPtr& y) {
        return is_quantifier_free(x) && !is_quantifier_free(y);
    });
    for (const FormulaPtr& k : kids) {
        bool v = eval_rec(k, env, ctx);
        if (is_and && !v) return false;
        if (!is_and && v) return true;
    }
    return is_and;
}

bool eval_quantifier(const FormulaPtr& f, Valuation& env, EvalContext& ctx) {
    bool exists = f->kind == Formula::Kind::Exists;
    std::set<std::string> scope;
    for (const auto& [k, _] : env) scope.insert(k);
    std::optional<Term> guard = quantifier_guard(f->kind, f->var, f->body, scope);

    const std::vector<Word>* domain = &ctx.universe;
    std::vector<Word> local;
    if (guard) {
        // Values outside the subwords of the guard term falsify the body (or
        // satisfy the guarded implication), so restricting the sweep to them
        // is exact.
        Word g = resolve(*guard, env, ctx.alphabet);
        local = ctx.subwords_of(g);
        domain = &local;
    }
    std::optional<Word> saved;
    if (auto it = env.find(f->var); it != env.end()) saved = it->second;
    bool result = !exists;
    for (const Word& w : *domain) {
        env[f->var] = w;
        bool v = eval_rec(f->body, env, ctx);
        if (exists && v) { result = true; break; }
        if (!exists && !v) { result = false; break; }
    }
    if (saved)
        env[f->var] = *saved;
    else
        env.erase(f->var);
    return result;
}

bool eval_rec(const FormulaPtr& f, Valuation& env, EvalContext& ctx) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
            return rel_holds(f->rel, resolve(f->left, env, ctx.alphabet),
                             resolve(f->right, env, ctx.alphabet));
        case Formula::Kind::MemberAtom:
            return nfa_member(ctx.nfa_for(f->lang), resolve(f->left, env, ctx.alphabet));
        case Formula::Kind::Not:
            return !eval_rec(f->a, env, ctx);
        case Formula::Kind::And:
            return eval_junction(f, env, ctx, true);
        case Formula::Kind::Or:
            return eval_junction(f, env, ctx, false);
        case Formula::Kind::Implies:
            return !eval_rec(f->a, env, ctx) || eval_rec(f->b, env, ctx);
        case Formula::Kind::Iff:
            return eval_rec(f->a, env, ctx) == eval_rec(f->b, env, ctx);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return eval_quantifier(f, env, ctx);
    }
    throw std::logic_error("unreachable formula kind");
}

}  // namespace

bool bounded_eval(const FormulaPtr& f, const Valuation& v, std::size_t universe_len,
                  const Alphabet& a) {
    for (const std::string& name : free_variables(f))
        if (!v.count(name))
            throw std::invalid_argument("valuation misses free variable: " + name);
    EvalContext ctx;
    ctx.alphabet = a;
    ctx.universe_len = universe_len;
    ctx.universe = words_upto(a, universe_len);
    Valuation env = v;
    return eval_rec(f, env, ctx);
}

namespace {

struct QuantifierReport {
    bool unguarded_bad = false;   // an unguarded quantifier not acting existentially
    bool unguarded_any = false;
};

// polarity: +1 positive, -1 negative, 0 mixed (below an Iff)
void scan_quantifiers(const FormulaPtr& f, int polarity, std::set<std::string>& scope,
                      QuantifierReport& rep) {
    switch (f->kind) {
        case Formula::Kind::RelAtom:
        case Formula::Kind::MemberAtom:
            return;
        case Formula::Kind::Not:
            scan_quantifiers(f->a, -polarity, scope, rep);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            scan_quantifiers(f->a, polarity, scope, rep);
            scan_quantifiers(f->b, polarity, scope, rep);
            return;
        case Formula::Kind::Implies:
            scan_quantifiers(f->a, -polarity, scope, rep);
            scan_quantifiers(f->b, polarity, scope, rep);
            return;
        case Formula::Kind::Iff:
            scan_quantifiers(f->a, 0, scope, rep);
            scan_quantifiers(f->b, 0, scope, rep);
            return;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (!quantifier_guard(f->kind, f->var, f->body, scope)) {
                rep.unguarded_any = true;
                bool acts_existentially =
                    (f->kind == Formula::Kind::Exists && polarity > 0) ||
                    (f->kind == Formula::Kind::Forall && polarity < 0);
                if (!acts_existentially) rep.unguarded_bad = true;
            }
            bool inserted = scope.insert(f->var).second;
            scan_quantifiers(f->body, polarity, scope, rep);
            if (inserted) scope.erase(f->var);
            return;
        }
    }
}

}  // namespace

BoundCertificate guardedness_check(const FormulaPtr& f) {
    QuantifierReport rep;
    std::set<std::string> scope = free_variables(f);
    scan_quantifiers(f, 1, scope, rep);
    if (!rep.unguarded_any) return BoundCertificate::Exact;
    if (!rep.unguarded_bad) return BoundCertificate::SoundForTrue;
    return BoundCertificate::Heuristic;
}

// ------------------------------------------------------------------- FO2

namespace {

// Internal representation for the existential-elimination step: a Boolean
// tree over three literal kinds, languages on the free variable, languages
// on the bound variable, and oriented relation atoms (free R bound).
struct LNode {
    enum class Kind { LangFree, LangBound, RelLit, Not, And, Or };
    Kind kind;
    Nfa lang;
    Rel rel = Rel::Eq;
    std::vector<LNode> kids;
};

LNode lnode_lang(bool on_free, Nfa m) {
    LNode n{on_free ? LNode::Kind::LangFree : LNode::Kind::LangBound, std::move(m), Rel::Eq, {}};
    return n;
}

LNode lnode_rel(Rel r) { return LNode{LNode::Kind::RelLit, Nfa{}, r, {}}; }

LNode lnode_op(LNode::Kind k, LNode a, LNode b) {
    LNode n{k, Nfa{}, Rel::Eq, {}};
    n.kids.push_back(std::move(a));
    n.kids.push_back(std::move(b));
    return n;
}

LNode lnode_not(LNode a) {
    LNode n{LNode::Kind::Not, Nfa{}, Rel::Eq, {}};
    n.kids.push_back(std::move(a));
    return n;
}

Rel rel_inverse(Rel r) {
    switch (r) {
        case Rel::Strict: return Rel::StrictInv;
        case Rel::StrictInv: return Rel::Strict;
        case Rel::Eq: return Rel::Eq;
        case Rel::Inc: return Rel::Inc;
        case Rel::SubEq: break;
    }
    throw std::logic_error("SubEq must be expanded before orientation");
}

RelationKind to_relation_kind(Rel r) {
    switch (r) {
        case Rel::Strict: return RelationKind::Strict;
        case Rel::StrictInv: return RelationKind::StrictInv;
        case Rel::Eq: return RelationKind::Equality;
        case Rel::Inc: return RelationKind::Incomparable;
        case Rel::SubEq: break;
    }
    throw std::logic_error("SubEq has no transducer; expand first");
}

struct Fo2Context {
    Alphabet alphabet;
    std::map<RelationKind, Transducer> relations;

    const Transducer& relation(RelationKind k) {
        auto it = relations.find(k);
        if (it == relations.end())
            it = relations.emplace(k, builtin_relation(k, alphabet)).first;
        return it->second;
    }
};

Nfa lang_rec(const FormulaPtr& f, const std::string& free_var, Fo2Context& ctx);

// Trivial one-variable relation atom: v R v.
Nfa self_relation_language(Rel r, Fo2Context& ctx) {
    switch (r) {
        case Rel::SubEq:
        case Rel::Eq:
            return nfa_universal(ctx.alphabet);
        default:
            return nfa_empty_language(ctx.alphabet);
    }
}

// Build the literal tree for the body of an exists over `bound` with free
// variable `free`; inner quantified subformulas are replaced by language
// literals computed recursively.
LNode build_lnode(const FormulaPtr& f, const std::string& free_var, const std::string& bound_var,
                  Fo2Context& ctx) {
    switch (f->kind) {
        case Formula::Kind::RelAtom: {
            const Term& l = f->left;
            const Term& r = f->right;
            if (l.is_const || r.is_const)
                throw std::logic_error("constants must be eliminated before fo2 recursion");
            if (l.text == r.text)
                return lnode_lang(l.text == free_var, self_relation_language(f->rel, ctx));
            // Two distinct variables; expand SubEq, then orient free-first.
            if (f->rel == Rel::SubEq)
                return lnode_op(LNode::Kind::Or,
                                build_lnode(f_rel(l, Rel::Strict, r), free_var, bound_var, ctx),
                                build_lnode(f_rel(l, Rel::Eq, r), free_var, bound_var, ctx));
            if (l.text == free_var && r.text == bound_var) return lnode_rel(f->rel);
            if (l.text == bound_var && r.text == free_var) return lnode_rel(rel_inverse(f->rel));
            throw std::invalid_argument("formula uses more than two variable names");
        }
        case Formula::Kind::MemberAtom: {
            const Term& t = f->left;
            if (t.is_const)
                throw std::logic_error("constants must be eliminated before fo2 recursion");
            if (t.text == free_var)
                return lnode_lang(true, regex_to_nfa(f->lang, ctx.alphabet));
            if (t.text == bound_var)
                return lnode_lang(false, regex_to_nfa(f->lang, ctx.alphabet));
            throw std::invalid_argument("formula uses more than two variable names");
        }
        case Formula::Kind::Not:
            return lnode_not(build_lnode(f->a, free_var, bound_var, ctx));
        case Formula::Kind::And:
            return lnode_op(LNode::Kind::And, build_lnode(f->a, free_var, bound_var, ctx),
                            build_lnode(f->b, free_var, bound_var, ctx));
        case Formula::Kind::Or:
            return lnode_op(LNode::Kind::Or, build_lnode(f->a, free_var, bound_var, ctx),
                            build_lnode(f->b, free_var, bound_var, ctx));
        case Formula::Kind::Implies:
            return lnode_op(LNode::Kind::Or,
                            lnode_not(build_lnode(f->a, free_var, bound_var, ctx)),
                            build_lnode(f->b, free_var, bound_var, ctx));
        case Formula::Kind::Iff: {
            LNode both = lnode_op(LNode::Kind::And,
                                  build_lnode(f->a, free_var, bound_var, ctx),
                                  build_lnode(f->b, free_var, bound_var, ctx));
            LNode neither = lnode_op(
                LNode::Kind::And, lnode_not(build_lnode(f->a, free_var, bound_var, ctx)),
                lnode_not(build_lnode(f->b, free_var, bound_var, ctx)));
            return lnode_op(LNode::Kind::Or, std::move(both), std::move(neither));
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            std::set<std::string> fv = free_variables(f);
            if (fv.size() > 1)
                throw std::invalid_argument("quantified subformula with two free variables");
            std::string carrier = fv.empty() ? bound_var : *fv.begin();
            Nfa lang = lang_rec(f, carrier, ctx);
            return lnode_lang(carrier == free_var, std::move(lang));
        }
    }
    throw std::logic_error("unreachable formula kind");
}

// Negation normal form over literal trees; negated literals resolve to
// complements (languages) or to the three-way relation disjunction.
LNode lnnf(LNode n, bool negated) {
    switch (n.kind) {
        case LNode::Kind::LangFree:
        case LNode::Kind::LangBound:
            if (negated) n.lang = nfa_complement(n.lang);
            return n;
        case LNode::Kind::RelLit: {
            if (!negated) return n;
            std::vector<Rel> others;
            for (Rel cand : {Rel::Eq, Rel::Strict, Rel::StrictInv, Rel::Inc})
                if (cand != n.rel) others.push_back(cand);
            LNode out = lnode_rel(others[0]);
            for (std::size_t i = 1; i < others.size(); ++i)
                out = lnode_op(LNode::Kind::Or, std::move(out), lnode_rel(others[i]));
            return out;
        }
        case LNode::Kind::Not:
            return lnnf(std::move(n.kids[0]), !negated);
        case LNode::Kind::And:
        case LNode::Kind::Or: {
            bool flip = negated;
            LNode::Kind k = n.kind;
            if (flip)
                k = k == LNode::Kind::And ? LNode::Kind::Or : LNode::Kind::And;
            LNode out{k, Nfa{}, Rel::Eq, {}};
            for (auto& kid : n.kids) out.kids.push_back(lnnf(std::move(kid), negated));
            return out;
        }
    }
    throw std::logic_error("unreachable lnode kind");
}

enum PurityBits { kUsesFree = 1, kUsesBound = 2, kUsesRel = 4 };

int purity(const LNode& n) {
    switch (n.kind) {
        case LNode::Kind::LangFree: return kUsesFree;
        case LNode::Kind::LangBound: return kUsesBound;
        case LNode::Kind::RelLit: return kUsesRel;
        default: {
            int p = 0;
            for (const auto& k : n.kids) p |= purity(k);
            return p;
        }
    }
}

// Compile a pure (single-variable) negation-free subtree to one language.
Nfa compile_pure(const LNode& n) {
    switch (n.kind) {
        case LNode::Kind::LangFree:
        case LNode::Kind::LangBound:
            return n.lang;
        case LNode::Kind::And:
            return trim(nfa_intersection(compile_pure(n.kids[0]), compile_pure(n.kids[1])));
        case LNode::Kind::Or:
            return nfa_union(compile_pure(n.kids[0]), compile_pure(n.kids[1]));
        default:
            throw std::logic_error("not a pure subtree");
    }
}

// Collapse maximal single-variable subtrees into one language literal each;
// keeps the later DNF expansion over mixed structure only.
LNode coalesce(LNode n) {
    int p = purity(n);
    if (p == kUsesFree) return lnode_lang(true, compile_pure(n));
    if (p == kUsesBound) return lnode_lang(false, compile_pure(n));
    if (n.kind == LNode::Kind::And || n.kind == LNode::Kind::Or)
        for (auto& k : n.kids) k = coalesce(std::move(k));
    return n;
}

struct Literal {
    enum class Kind { LangFree, LangBound, RelLit } kind;
    const Nfa* lang = nullptr;
    Rel rel = Rel::Eq;
};

// Disjunction of conjunctions of literals.
std::vector<std::vector<Literal>> to_dnf(const LNode& n) {
    switch (n.kind) {
        case LNode::Kind::LangFree:
            return {{Literal{Literal::Kind::LangFree, &n.lang, Rel::Eq}}};
        case LNode::Kind::LangBound:
            return {{Literal{Literal::Kind::LangBound, &n.lang, Rel::Eq}}};
        case LNode::Kind::RelLit:
            return {{Literal{Literal::Kind::RelLit, nullptr, n.rel}}};
        case LNode::Kind::Or: {
            std::vector<std::vector<Literal>> out;
            for (const auto& k : n.kids) {
                auto sub = to_dnf(k);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case LNode::Kind::And: {
            std::vector<std::vector<Literal>> acc{{}};
            for (const auto& k : n.kids) {
                auto sub = to_dnf(k);
                std::vector<std::vector<Literal>> next;
                for (const auto& lhs : acc)
                    for (const auto& rhs : sub) {
                        std::vector<Literal> merged = lhs;
                        merged.insert(merged.end(), rhs.begin(), rhs.end());
                        next.push_back(std::move(merged));
                    }
                acc = std::move(next);
            }
            return acc;
        }
        case LNode::Kind::Not:
            throw std::logic_error("negation must be eliminated before DNF");
    }
    throw std::logic_error("unreachable lnode kind");
}

// exists bound . body, evaluated per the language construction: per DNF
// disjunct, free-variable atoms move outside, bound-variable languages
// intersect into one, and the relation atoms decide between a preimage, a
// nonemptiness test, or an unsatisfiable conjunction.
Nfa exists_language(const FormulaPtr& body, const std::string& free_var,
                    const std::string& bound_var, Fo2Context& ctx) {
    LNode tree = coalesce(lnnf(build_lnode(body, free_var, bound_var, ctx), false));
    std::vector<std::vector<Literal>> disjuncts = to_dnf(tree);
    Nfa result = nfa_empty_language(ctx.alphabet);
    for (const auto& conj : disjuncts) {
        Nfa lx = nfa_universal(ctx.alphabet);
        Nfa ly = nfa_universal(ctx.alphabet);
        std::set<Rel> rels;
        for (const Literal& lit : conj) {
            switch (lit.kind) {
                case Literal::Kind::LangFree:
                    lx = trim(nfa_intersection(lx, *lit.lang));
                    break;
                case Literal::Kind::LangBound:
                    ly = trim(nfa_intersection(ly, *lit.lang));
                    break;
                case Literal::Kind::RelLit:
                    rels.insert(lit.rel);
                    break;
            }
        }
        Nfa part = nfa_empty_language(ctx.alphabet);
        if (rels.size() >= 2) {
            // Two distinct partition relations between the same pair never
            // hold together.
            continue;
        } else if (rels.size() == 1) {
            part = trim(nfa_intersection(lx, preimage(ctx.relation(to_relation_kind(*rels.begin())), ly)));
        } else {
            if (!nfa_is_empty(ly)) part = lx;
        }
        result = nfa_union(result, part);
    }
    return minimize(result);
}

Nfa lang_rec(const FormulaPtr& f, const std::string& free_var, Fo2Context& ctx) {
    switch (f->kind) {
        case Formula::Kind::RelAtom: {
            if (f->left.is_const || f->right.is_const)
                throw std::logic_error("constants must be eliminated before fo2 recursion");
            if (f->left.text == f->right.text)
                return self_relation_language(f->rel, ctx);
            throw std::invalid_argument("relation atom with a second free variable");
        }
        case Formula::Kind::MemberAtom:
            if (f->left.is_const)
                throw std::logic_error("constants must be eliminated before fo2 recursion");
            if (f->left.text != free_var)
                throw std::invalid_argument("membership atom on an unbound variable");
            return regex_to_nfa(f->lang, ctx.alphabet);
        case Formula::Kind::Not:
            return nfa_complement(lang_rec(f->a, free_var, ctx));
        case Formula::Kind::And:
            return trim(nfa_intersection(lang_rec(f->a, free_var, ctx),
                                         lang_rec(f->b, free_var, ctx)));
        case Formula::Kind::Or:
            return nfa_union(lang_rec(f->a, free_var, ctx), lang_rec(f->b, free_var, ctx));
        case Formula::Kind::Implies:
            return nfa_union(nfa_complement(lang_rec(f->a, free_var, ctx)),
                             lang_rec(f->b, free_var, ctx));
        case Formula::Kind::Iff: {
            Nfa l = lang_rec(f->a, free_var, ctx);
            Nfa r = lang_rec(f->b, free_var, ctx);
            return nfa_union(trim(nfa_intersection(l, r)),
                             trim(nfa_intersection(nfa_complement(l), nfa_complement(r))));
        }
        case Formula::Kind::Exists: {
            if (f->var == free_var) {
                // Shadowing: the subformula is closed; its truth is the
                // nonemptiness of the inner language.
                bool truth = !nfa_is_empty(lang_rec(f->body, f->var, ctx));
                return truth ? nfa_universal(ctx.alphabet) : nfa_empty_language(ctx.alphabet);
            }
            return exists_language(f->body, free_var, f->var, ctx);
        }
        case Formula::Kind::Forall: {
            if (f->var == free_var) {
                bool truth = nfa_is_universal(lang_rec(f->body, f->var, ctx));
                return truth ? nfa_universal(ctx.alphabet) : nfa_empty_language(ctx.alphabet);
            }
            // forall y phi == not exists y not phi
            return nfa_complement(exists_language(f_not(f->body), free_var, f->var, ctx));
        }
    }
    throw std::logic_error("unreachable formula kind");
}

}  // namespace

Nfa fo2_language(const FormulaPtr& f, const std::string& free_var, const Alphabet& a) {
    if (all_variable_names(f).size() > 2)
        throw std::invalid_argument("formula is not FO2: more than two variable names");
    std::set<std::string> fv = free_variables(f);
    fv.erase(free_var);
    if (!fv.empty())
        throw std::invalid_argument("formula has a free variable besides the designated one: " +
                                    *fv.begin());
    Fo2Context ctx;
    ctx.alphabet = a;
    FormulaPtr cleaned = eliminate_constants(f, a);
    return lang_rec(cleaned, free_var, ctx);
}

bool fo2_decide(const FormulaPtr& f, const Alphabet& a) {
    if (!free_variables(f).empty())
        throw std::invalid_argument("fo2_decide requires a closed sentence");
    if (all_variable_names(f).size() > 2)
        throw std::invalid_argument("sentence is not FO2: more than two variable names");
    switch (f->kind) {
        case Formula::Kind::RelAtom:
            return rel_holds(f->rel, Word(a, f->left.text), Word(a, f->right.text));
        case Formula::Kind::MemberAtom:
            return nfa_member(regex_to_nfa(f->lang, a), Word(a, f->left.text));
        case Formula::Kind::Not:
            return !fo2_decide(f->a, a);
        case Formula::Kind::And:
            return fo2_decide(f->a, a) && fo2_decide(f->b, a);
        case Formula::Kind::Or:
            return fo2_decide(f->a, a) || fo2_decide(f->b, a);
        case Formula::Kind::Implies:
            return !fo2_decide(f->a, a) || fo2_decide(f->b, a);
        case Formula::Kind::Iff:
            return fo2_decide(f->a, a) == fo2_decide(f->b, a);
        case Formula::Kind::Exists:
            return !nfa_is_empty(fo2_language(f->body, f->var, a));
        case Formula::Kind::Forall:
            return nfa_is_universal(fo2_language(f->body, f->var, a));
    }
    throw std::logic_error("unreachable formula kind");
}

// ---------------------------------------------------------------- Sigma1

namespace {

void peel_exists(const FormulaPtr& f, std::vector<std::string>& vars, FormulaPtr& matrix) {
    FormulaPtr cur = f;
    while (cur->kind == Formula::Kind::Exists) {
        vars.push_back(cur->var);
        cur = cur->body;
    }
    matrix = cur;
}

}  // namespace

std::size_t sigma1_default_bound(const FormulaPtr& f) {
    std::vector<std::string> vars;
    FormulaPtr matrix;
    peel_exists(f, vars, matrix);
    std::size_t const_len = 0;
    for (const std::string& c : constant_texts(matrix)) const_len += c.size();
    return 2 * (vars.size() + const_len);
}

Sigma1Result sigma1_search(const FormulaPtr& f, const Alphabet& a,
                           std::optional<std::size_t> max_len) {
    std::vector<std::string> vars;
    FormulaPtr matrix;
    peel_exists(f, vars, matrix);
    if (!is_quantifier_free(matrix))
        throw std::invalid_argument("sigma1_search requires an existential block over a "
                                    "quantifier-free matrix");
    for (const std::string& v : free_variables(matrix))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw std::invalid_argument("unbound variable in sigma1 matrix: " + v);

    Sigma1Result res;
    res.bound_used = max_len.value_or(sigma1_default_bound(f));
    std::vector<Word> words = words_upto(a, res.bound_used);
    std::size_t k = vars.size();
    std::vector<std::size_t> idx(k, 0);
    // The matrix is quantifier-free, so bounded_eval decides it exactly.
    while (true) {
        Valuation env;
        for (std::size_t i = 0; i < k; ++i) env[vars[i]] = words[idx[i]];
        if (bounded_eval(matrix, env, 0, a)) {
            res.sat = true;
            res.witness = std::move(env);
            return res;
        }
        // Odometer step over the word list, last variable fastest.
        bool advanced = false;
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < words.size()) {
                advanced = true;
                break;
            }
            idx[pos] = 0;
        }
        if (!advanced) break;
    }
    return res;
}

}  // namespace subseq
