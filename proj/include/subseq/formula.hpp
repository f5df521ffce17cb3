#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "subseq/regex.hpp"
#include "subseq/word.hpp"

namespace subseq {

/// Binary relations available as atoms. SubEq is the subword order; the
/// other four form the partition {=, <, >, incomparable} the FO2 decider
/// works with.
enum class Rel { SubEq, Strict, StrictInv, Eq, Inc };

/// A term is a variable name or a word constant (letters over the ambient
/// alphabet; empty string is the empty word).
struct Term {
    bool is_const = false;
    std::string text;

    static Term var(std::string name) { return {false, std::move(name)}; }
    static Term constant(std::string letters) { return {true, std::move(letters)}; }
    bool operator==(const Term&) const = default;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { RelAtom, MemberAtom, Not, And, Or, Implies, Iff, Exists, Forall };

    Kind kind;
    // RelAtom
    Term left, right;
    Rel rel = Rel::SubEq;
    // MemberAtom: term `left`, language `lang`
    RegexPtr lang;
    // connectives; Not uses `a` only
    FormulaPtr a, b;
    // quantifiers
    std::string var;
    FormulaPtr body;
};

FormulaPtr f_rel(Term l, Rel r, Term rt);
FormulaPtr f_member(Term t, RegexPtr lang);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(std::string var, FormulaPtr body);
FormulaPtr f_forall(std::string var, FormulaPtr body);
/// Conjunction of a list; `fallback` is returned for an empty list.
FormulaPtr f_and_all(std::vector<FormulaPtr> fs, FormulaPtr fallback);
FormulaPtr f_or_all(std::vector<FormulaPtr> fs, FormulaPtr fallback);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Minimal-parenthesis concrete syntax; reparses to an identical AST.
std::string print_formula(const FormulaPtr& f);

std::set<std::string> free_variables(const FormulaPtr& f);
std::set<std::string> all_variable_names(const FormulaPtr& f);
bool is_quantifier_free(const FormulaPtr& f);
/// Every word-constant text appearing in relation atoms.
std::set<std::string> constant_texts(const FormulaPtr& f);

enum class Dialect { Pure, Basic, Extended };

/// Dialect, variable budget and quantifier-alternation levels of a formula.
/// sigma_level/pi_level are the least n with membership in Sigma_n/Pi_n;
/// quantifier-free formulas report level 0.
struct FragmentProfile {
    Dialect dialect = Dialect::Pure;
    int fo_vars = 0;
    int sigma_level = 0;
    int pi_level = 0;

    bool operator==(const FragmentProfile&) const = default;
};

FragmentProfile classify(const FormulaPtr& f);

std::string dialect_name(Dialect d);

/// Parse the formula grammar: `E x. f` / `A x. f`, infix `<->`, `->`, `|`,
/// `&`, prefix `!`, atoms `t <= t`, `t < t`, `t >= t`, `t > t`, `t = t`,
/// `t >< t`, `t in /regex/`; terms are identifiers or double-quoted word
/// constants. Throws std::runtime_error with a position on syntax errors.
FormulaPtr parse_formula(std::string_view text, const Alphabet& a);

/// Equivalent formula whose relation atoms mention no word constants;
/// constant-vs-variable atoms become regular membership atoms, ground atoms
/// fold into truth constants.
FormulaPtr eliminate_constants(const FormulaPtr& f, const Alphabet& a);

enum class NormalForm { Nnf, DnfQf };

/// Nnf: expand SubEq atoms into Strict-or-Eq, push negations inward, then
/// remove them against atoms (membership complement; three-way relation
/// disjunction). DnfQf additionally distributes to a disjunction of
/// conjunctions of positive atoms and requires quantifier-free input.
FormulaPtr normalize(const FormulaPtr& f, NormalForm form, const Alphabet& a);

}  // namespace subseq
