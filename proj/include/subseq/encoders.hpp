#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subseq/formula.hpp"
#include "subseq/nfa.hpp"
#include "subseq/word.hpp"

namespace subseq {

// ------------------------------------------------------ property formulas

/// "x in B*": conjunction of non-subword atoms over the complement letters.
FormulaPtr p1(const Alphabet& a, const std::string& b, const Term& x);
/// "proj_B(source) <= target" via a guarded universal.
FormulaPtr p2(const Alphabet& a, const std::string& b, const Term& target, const Term& source,
              const std::string& zname);
/// "first = proj_B(second)".
FormulaPtr p3(const Alphabet& a, const std::string& b, const Term& first, const Term& second,
              const std::string& zname);
/// "proj_B(x) = proj_B(y)".
FormulaPtr p4(const Alphabet& a, const std::string& b, const Term& x, const Term& y,
              const std::string& zname);
/// "x starts with a" (or ends with it for the mirror form).
FormulaPtr p5(const Alphabet& a, char letter, const Term& x, const std::string& existsname,
              const std::string& forallname, bool ends_with = false);
/// "x has no aa factor".
FormulaPtr p6(const Alphabet& a, char letter, const Term& x, const std::string& yname,
              const std::string& zname);
/// "x has no factor in BB".
FormulaPtr p7(const Alphabet& a, const std::string& b, const Term& x, const std::string& yname,
              const std::string& zname);
/// "exactly two letters of B occur in x (counted with multiplicity)".
FormulaPtr p8(const Alphabet& a, const std::string& b, const Term& x);

/// Dispatcher for the CLI: id in 1..8, params are the letter set (or single
/// letter) and variable names in the order the builders above take them.
FormulaPtr p_formula(int id, const Alphabet& a, const std::string& letters,
                     const std::vector<std::string>& names);

// --------------------------------------------------- regular -> formula

struct RegularEncoding {
    FormulaPtr formula;          // phi_L(x), an existential run formula
    Alphabet extended_alphabet;  // input alphabet plus one symbol per state
    std::map<int, char> state_symbols;
};

/// Express NFA membership as a basic-logic formula over an extended
/// alphabet: free variable, run variable, auxiliary variable. `ambient`
/// symbols are avoided (and included) when extending; defaults to the
/// automaton's own alphabet.
RegularEncoding regular_to_formula(const Nfa& m, const std::string& xname = "x",
                                   const std::string& yname = "y",
                                   const std::string& zname = "z",
                                   std::optional<Alphabet> ambient = std::nullopt);

// ----------------------------------------------------------- SAT / QBF

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS-style literals
};

Cnf parse_dimacs(const std::string& text);

/// Existential sentence satisfiable over any nonempty alphabet iff the CNF
/// is: variables z, x1..xn, each p_i becoming x_i <= z.
FormulaPtr sat_to_sigma1(const Cnf& cnf);

struct BoolExpr;
using BoolPtr = std::shared_ptr<const BoolExpr>;
struct BoolExpr {
    enum class Kind { Var, Not, And, Or };
    Kind kind;
    int var = 0;
    BoolPtr a, b;

    static BoolPtr mkvar(int v);
    static BoolPtr mknot(BoolPtr x);
    static BoolPtr mkand(BoolPtr x, BoolPtr y);
    static BoolPtr mkor(BoolPtr x, BoolPtr y);
};

struct Qbf {
    std::vector<std::pair<bool, int>> prefix;  // (is_exists, var)
    BoolPtr matrix;
};

/// QDIMACS-style subset: optional `p cnf` line, `e`/`a` prefix lines,
/// 0-terminated clause lines.
Qbf parse_qdimacs(const std::string& text);

struct TqbfEncoding {
    FormulaPtr sentence;  // FO2 over the letter alphabet below
    Alphabet alphabet;    // T1 F1 T2 F2 ... for the padded prefix
    int padded_vars = 0;
    std::map<int, int> position_of;  // original var -> 1-based position
};

/// Theorem-style reduction: strict exists/forall alternation (padded with
/// dummies when needed), one T/F letter pair per position, valuations built
/// up along a subword chain of the two alternating variables.
TqbfEncoding tqbf_to_fo2(const Qbf& q);

// ------------------------------------------------------------------ PCP

struct PcpInstance {
    Alphabet gamma;
    std::vector<std::pair<Word, Word>> pairs;
    std::optional<Word> prefix;  // variant form
};

/// Text form: one `u v` pair per line, optional `prefix: w` and
/// `alphabet: ...` headers.
PcpInstance parse_pcp(const std::string& text);

struct PcpEncoding {
    FormulaPtr sentence;
    Alphabet alphabet;  // Gamma + indices (+ hatted copy and states as needed)
};

/// phi_P over Gamma plus index letters; Extended emits regex membership
/// atoms, Basic expands them through regular_to_formula.
PcpEncoding pcp_to_sigma2(const PcpInstance& inst, Dialect dialect);

/// Fixed-alphabet variant with a hatted prefix copy and the letter-renaming
/// transduction applied to the second language.
PcpEncoding variant_pcp_to_sigma2(const PcpInstance& inst);

// ----------------------------------------------------------- purification

struct PurifyResult {
    FormulaPtr sentence;  // the closed pure sentence, one existential block
    std::vector<std::pair<std::string, FormulaPtr>> conjuncts;  // labeled psi groups
    std::map<std::string, std::string> definitions;  // constant word -> variable
    std::vector<std::string> variables;              // the existential block, in order
};

/// Replace the word constants of a basic-dialect payload by purely defined
/// variables: empty word, letters, letter powers, and general words pinned
/// by their short-subword profiles. Constants longer than max_level are
/// rejected.
PurifyResult purify(const std::vector<Word>& constant_words, const FormulaPtr& payload,
                    const Alphabet& a, std::size_t max_level = 4);

}  // namespace subseq
